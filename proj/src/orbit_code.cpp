#include "orbitcodes/orbit_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitcodes {

OrbitCode::OrbitCode(Subspace base, FiniteGroup group, std::vector<Subspace> codewords,
                     FiniteGroup stab)
    : base_(std::move(base)), group_(std::move(group)), codewords_(std::move(codewords)),
      stabilizer_(std::move(stab)) {}

OrbitCode OrbitCode::generate(const FiniteGroup& g, const Subspace& v) {
    std::vector<Subspace> words;
    std::vector<GroupElement> stab_elements;
    for (const GroupElement& e : g.elements()) {
        Subspace w = act(e, v);
        if (w == v) stab_elements.push_back(e);
        words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    FiniteGroup stab = FiniteGroup::from_elements(std::move(stab_elements), /*verify=*/false);
    if (words.size() * stab.size() != g.size())
        throw std::logic_error("orbit-stabilizer mismatch");  // action bug, not user error
    return OrbitCode(v, g, std::move(words), std::move(stab));
}

bool OrbitCode::contains(const Subspace& s) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), s);
}

OrbitCode::Parameters OrbitCode::parameters() const {
    return Parameters{ambient_dim(), static_cast<long long>(size()), min_distance_naive(*this),
                      dimension()};
}

FiniteGroup stabilizer(const FiniteGroup& g, const Subspace& v) {
    std::vector<GroupElement> elems;
    for (const GroupElement& e : g.elements())
        if (act(e, v) == v) elems.push_back(e);
    return FiniteGroup::from_elements(std::move(elems), /*verify=*/false);
}

int min_distance_naive(const OrbitCode& code) {
    if (code.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    int best = 2 * code.dimension() + 1;
    for (const Subspace& w : code.codewords()) {
        if (w == code.base_point()) continue;
        best = std::min(best, subspace_distance(code.base_point(), w));
    }
    return best;
}

int min_distance_exhaustive(std::span<const Subspace> words) {
    if (words.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    int best = -1;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            const int d = subspace_distance(words[i], words[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

OrbitCode spread_code(const Field& f, int r) {
    const int n = f->extension_degree();
    if (r < 1 || n % r != 0) throw std::invalid_argument("spread code needs r | n");
    const long long q = f->base().order();
    long long qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    const long long step = f->multiplicative_order() / (qr - 1);

    // the subfield F_{q^r}: exponents that are multiples of (q^n-1)/(q^r-1)
    std::vector<long long> exps;
    for (long long i = 0; i < qr - 1; ++i) exps.push_back(i * step);
    Subspace subfield = Subspace::from_field_elements(f, exps);

    FiniteGroup cyclic = FiniteGroup::generate({GroupElement::field_scalar(f, 1)});
    return OrbitCode::generate(cyclic, subfield);
}

std::vector<Subspace> voronoi_region(const OrbitCode& code, const std::vector<Subspace>& ambient,
                                     const Subspace& c, VoronoiMode mode) {
    if (!code.contains(c)) throw std::invalid_argument("reference point is not a codeword");
    std::vector<Subspace> region;
    for (const Subspace& x : ambient) {
        int dmin = -1;
        for (const Subspace& c2 : code.codewords()) {
            if (mode == VoronoiMode::exclude_self && c2 == x) continue;
            const int d = subspace_distance(c2, x);
            if (dmin < 0 || d < dmin) dmin = d;
        }
        if (dmin >= 0 && subspace_distance(c, x) == dmin) region.push_back(x);
    }
    return region;
}

std::map<int, long long> distance_profile(const OrbitCode& code, const Subspace& c) {
    if (!code.contains(c)) throw std::invalid_argument("reference point is not a codeword");
    std::map<int, long long> profile;
    for (const Subspace& w : code.codewords()) {
        if (w == c) continue;
        ++profile[subspace_distance(c, w)];
    }
    return profile;
}

}  // namespace orbitcodes
