#pragma once

// Orbit codes: the image set of a subspace under a finite matrix or
// semilinear group, with stabilizers, minimum distance, spread codes,
// distance profiles and Voronoi regions.

#include <map>
#include <span>
#include <vector>

#include "orbitcodes/group_action.hpp"

namespace orbitcodes {

class OrbitCode {
public:
    static OrbitCode generate(const FiniteGroup& g, const Subspace& v);

    const Subspace& base_point() const { return base_; }
    const FiniteGroup& group() const { return group_; }
    // Deduplicated, sorted by canonical form.
    const std::vector<Subspace>& codewords() const { return codewords_; }
    const FiniteGroup& stabilizer() const { return stabilizer_; }

    std::size_t size() const { return codewords_.size(); }
    int ambient_dim() const { return base_.ambient_dim(); }
    int dimension() const { return base_.dim(); }
    bool contains(const Subspace& s) const;

    struct Parameters {
        int n;         // ambient dimension
        long long m;   // cardinality
        int d;         // minimum subspace distance
        int k;         // codeword dimension
    };
    Parameters parameters() const;  // requires size >= 2

private:
    OrbitCode(Subspace base, FiniteGroup group, std::vector<Subspace> codewords,
              FiniteGroup stabilizer);
    Subspace base_;
    FiniteGroup group_;
    std::vector<Subspace> codewords_;
    FiniteGroup stabilizer_;
};

FiniteGroup stabilizer(const FiniteGroup& g, const Subspace& v);

// Minimum distance from the base point alone; for orbit codes this equals
// the minimum over all pairs because the group acts by isometries.
int min_distance_naive(const OrbitCode& code);
// Independent all-pairs oracle.
int min_distance_exhaustive(std::span<const Subspace> words);

// Orbit of the subfield F_{q^r} under the cyclic group of the primitive
// root: an (n, (q^n-1)/(q^r-1), 2r, r) code.
OrbitCode spread_code(const Field& f, int r);

enum class VoronoiMode {
    literal,       // d(c,x) == min over all codewords c2 of d(c2,x)
    exclude_self,  // diagnostic reading: the minimum skips c2 == x
};
std::vector<Subspace> voronoi_region(const OrbitCode& code, const std::vector<Subspace>& ambient,
                                     const Subspace& c, VoronoiMode mode = VoronoiMode::literal);

// Multiset of distances from c to every other codeword.
std::map<int, long long> distance_profile(const OrbitCode& code, const Subspace& c);

}  // namespace orbitcodes
