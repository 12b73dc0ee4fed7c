#pragma once

// Geometrically uniform partitions of orbit codes by subgroups: coset
// subcodes, intra/inter distance multisets, profile polynomials, fairness
// and homogeneity checks, chain partitions, and the reduced minimum
// distance computation that pairs inverse cosets and measures from a
// single codeword.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes {

// distance -> multiplicity
using DistanceMultiset = std::map<int, long long>;
// distance -> coefficient of w^distance
using ProfilePolynomial = std::map<int, long long>;

struct GuPartition {
    OrbitCode code;
    FiniteGroup subgroup;
    std::vector<Coset> subgroup_cosets;            // first coset is H itself
    std::vector<std::vector<Subspace>> subcodes;   // aligned with cosets, each sorted
};

// Decomposes the code into the orbits of its base point's coset translates.
// Requires H <= G; for non-Abelian G the subgroup must also be normal.
// The subcodes must partition the code (the stabilizer of the base point
// has to be contained in H), otherwise the call is rejected.
GuPartition partition_by_subgroup(const OrbitCode& code, const FiniteGroup& h);

// Multiset of pairwise distances inside b (unordered pairs).
DistanceMultiset intradistance(std::span<const Subspace> b);
// Multiset of distances across two disjoint sets (|b1| * |b2| entries).
DistanceMultiset interdistance(std::span<const Subspace> b1, std::span<const Subspace> b2);

// Coefficients a(d) of the polynomial counting distance-d pairs between
// subcode i and its g-translate.  For g in the identity coset the
// polynomial is derived from the intradistance multiset instead
// (diagnostic reading; the interdistance form would be degenerate).
ProfilePolynomial profile_polynomial(const GuPartition& p, const GroupElement& g,
                                     std::size_t subcode_index);

std::string polynomial_to_string(const ProfilePolynomial& p);

// Fairness: subsets pairwise distinct, of equal size, with equal
// intradistance multisets.
bool is_fair(const std::vector<std::vector<Subspace>>& parts);

// One partition per level; fairness checked level by level.
bool is_fair_chain(const std::vector<std::vector<std::vector<Subspace>>>& levels);

// F(w, g_i, subcode_j) independent of j for every coset representative.
bool is_strongly_homogeneous(const GuPartition& p);

struct FastMinDistance {
    int min_distance = 0;
    // Distances evaluated by the paired-coset scheme: the sum of the
    // subcode sizes over the chosen coset representatives.
    long long computations = 0;
    // Distances from the base point into its own subcode.  The paired
    // cosets alone can miss the minimum when it is attained inside H (the
    // subgroup's own translates); this supplement closes that gap, so the
    // returned value always equals the exhaustive minimum.
    long long intra_computations = 0;
    // Set when no reduction applies (non-Abelian group) and a plain
    // base-point scan was used instead.
    bool used_fallback = false;
};

// Minimum distance via one representative per inverse-pair of nontrivial
// cosets plus the base point's own H-translates.  Equals the exhaustive
// minimum on Abelian orbit codes.
FastMinDistance fast_min_distance(const OrbitCode& code, const FiniteGroup& h);

// Predicted evaluation count for a cyclic group of order r*s partitioned
// by its subgroup of order s: floor((r-1)/2) * s / (q-1) when the scalar
// subgroup of order q-1 stabilizes the base point.
long long predicted_fast_count(long long r, long long s, long long q);

struct ChainPartition {
    std::vector<FiniteGroup> series;  // G itself first, then the proper subgroups
    // levels[j] holds the partition of the code into series[j]-orbits.
    std::vector<std::vector<std::vector<Subspace>>> levels;
};

// Applies partition_by_subgroup along a nested subgroup series; level j
// refines level j-1.
ChainPartition chain_partition(const OrbitCode& code, const std::vector<FiniteGroup>& series);

}  // namespace orbitcodes
