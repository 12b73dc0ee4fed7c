#include "orbitcodes/gu_partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbitcodes {

namespace {

std::vector<Subspace> orbit_under(const FiniteGroup& h, const Subspace& point) {
    std::vector<Subspace> orbit;
    orbit.reserve(h.size());
    for (const GroupElement& x : h.elements()) orbit.push_back(act(x, point));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

}  // namespace

GuPartition partition_by_subgroup(const OrbitCode& code, const FiniteGroup& h) {
    const FiniteGroup& g = code.group();
    if (!g.contains_all(h)) throw std::invalid_argument("H is not a subgroup of the code's group");
    if (!g.is_abelian() && !h.is_normal_in(g))
        throw std::invalid_argument("subgroup must be normal when the group is not Abelian");

    GuPartition p{code, h, cosets(g, h), {}};
    std::set<Subspace> covered;
    for (const Coset& c : p.subgroup_cosets) {
        std::vector<Subspace> subcode = orbit_under(h, act(c.representative, code.base_point()));
        for (const Subspace& w : subcode)
            if (!covered.insert(w).second)
                throw std::invalid_argument(
                    "coset subcodes overlap: the base-point stabilizer is not contained in the "
                    "subgroup");
        p.subcodes.push_back(std::move(subcode));
    }
    if (covered.size() != code.size())
        throw std::logic_error("coset subcodes fail to cover the code");
    return p;
}

DistanceMultiset intradistance(std::span<const Subspace> b) {
    DistanceMultiset out;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) ++out[subspace_distance(b[i], b[j])];
    return out;
}

DistanceMultiset interdistance(std::span<const Subspace> b1, std::span<const Subspace> b2) {
    std::set<Subspace> left(b1.begin(), b1.end());
    for (const Subspace& w : b2)
        if (left.count(w)) throw std::invalid_argument("interdistance requires disjoint sets");
    DistanceMultiset out;
    for (const Subspace& x : b1)
        for (const Subspace& y : b2) ++out[subspace_distance(x, y)];
    return out;
}

ProfilePolynomial profile_polynomial(const GuPartition& p, const GroupElement& g,
                                     std::size_t subcode_index) {
    if (subcode_index >= p.subcodes.size()) throw std::invalid_argument("subcode index out of range");

    std::size_t coset_index = p.subgroup_cosets.size();
    for (std::size_t i = 0; i < p.subgroup_cosets.size() && coset_index == p.subgroup_cosets.size();
         ++i)
        for (const GroupElement& e : p.subgroup_cosets[i].elements)
            if (e == g) {
                coset_index = i;
                break;
            }
    if (coset_index == p.subgroup_cosets.size())
        throw std::invalid_argument("element does not represent a coset of the partition");

    const std::vector<Subspace>& b1 = p.subcodes[subcode_index];
    if (coset_index == 0) return intradistance(b1);

    const Subspace translated =
        act(p.subgroup_cosets[coset_index].representative,
            act(p.subgroup_cosets[subcode_index].representative, p.code.base_point()));
    return interdistance(b1, orbit_under(p.subgroup, translated));
}

std::string polynomial_to_string(const ProfilePolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, a] : p) {
        if (!first) os << " + ";
        first = false;
        if (a != 1 || d == 0) os << a;
        if (d > 0) {
            os << "w";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

bool is_fair(const std::vector<std::vector<Subspace>>& parts) {
    if (parts.size() < 2) return true;
    std::vector<DistanceMultiset> intra;
    intra.reserve(parts.size());
    for (const auto& b : parts) intra.push_back(intradistance(b));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            if (parts[i] == parts[j]) return false;
            if (parts[i].size() != parts[j].size()) return false;
            if (intra[i] != intra[j]) return false;
        }
    return true;
}

bool is_fair_chain(const std::vector<std::vector<std::vector<Subspace>>>& levels) {
    for (const auto& level : levels)
        if (!is_fair(level)) return false;
    return true;
}

bool is_strongly_homogeneous(const GuPartition& p) {
    for (const Coset& c : p.subgroup_cosets) {
        const ProfilePolynomial reference = profile_polynomial(p, c.representative, 0);
        for (std::size_t j = 1; j < p.subcodes.size(); ++j)
            if (profile_polynomial(p, c.representative, j) != reference) return false;
    }
    return true;
}

FastMinDistance fast_min_distance(const OrbitCode& code, const FiniteGroup& h) {
    const FiniteGroup& g = code.group();
    if (!g.contains_all(h)) throw std::invalid_argument("H is not a subgroup of the code's group");

    if (!g.is_abelian()) {
        // No reduction available; scan from the base point.
        FastMinDistance fallback;
        fallback.min_distance = min_distance_naive(code);
        fallback.intra_computations = static_cast<long long>(code.size()) - 1;
        fallback.used_fallback = true;
        return fallback;
    }

    const std::vector<Coset> cs = cosets(g, h);

    // One representative per inverse-pair of nontrivial cosets; self-paired
    // cosets contribute once.
    std::vector<std::size_t> chosen;
    std::set<std::size_t> handled;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        if (handled.count(i)) continue;
        const GroupElement inv = cs[i].representative.inverse();
        std::size_t partner = i;
        for (std::size_t j = 1; j < cs.size() && partner == i; ++j) {
            if (j == i) continue;
            for (const GroupElement& e : cs[j].elements)
                if (e == inv) {
                    partner = j;
                    break;
                }
        }
        handled.insert(i);
        handled.insert(partner);
        chosen.push_back(cs[i].representative < cs[partner].representative ? i : partner);
    }

    const Subspace& v = code.base_point();
    FastMinDistance result;
    result.min_distance = -1;
    for (std::size_t i : chosen) {
        const std::vector<Subspace> subcode = orbit_under(h, act(cs[i].representative, v));
        result.computations += static_cast<long long>(subcode.size());
        for (const Subspace& w : subcode) {
            if (w == v) continue;  // stabilizer translate, not a distinct codeword
            const int d = subspace_distance(v, w);
            if (result.min_distance < 0 || d < result.min_distance) result.min_distance = d;
        }
    }

    // The minimum can hide among the base point's own H-translates, which
    // no inter-coset set contains; scan the base subcode as well.
    for (const Subspace& w : orbit_under(h, v)) {
        if (w == v) continue;
        ++result.intra_computations;
        const int d = subspace_distance(v, w);
        if (result.min_distance < 0 || d < result.min_distance) result.min_distance = d;
    }

    if (result.min_distance < 0) {
        // singleton code cannot yield a distance
        throw std::invalid_argument("minimum distance needs at least two codewords");
    }
    return result;
}

long long predicted_fast_count(long long r, long long s, long long q) {
    return ((r - 1) / 2) * (s / (q - 1));
}

ChainPartition chain_partition(const OrbitCode& code, const std::vector<FiniteGroup>& series) {
    ChainPartition chain;
    chain.series.push_back(code.group());
    for (const FiniteGroup& s : series) {
        if (!chain.series.back().contains_all(s))
            throw std::invalid_argument("series is not nested");
        chain.series.push_back(s);
    }

    chain.levels.push_back({code.codewords()});
    for (std::size_t j = 1; j < chain.series.size(); ++j)
        chain.levels.push_back(partition_by_subgroup(code, chain.series[j]).subcodes);
    return chain;
}

}  // namespace orbitcodes
