#pragma once

// Multi-level multishot subspace codes: leveled partition trees over an
// alphabet of subspaces driven by a subgroup series, intrasubset distances
// with reduced evaluation counts, component-code validation against a
// design distance, and codeword assembly over m channel uses.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitcodes/gu_partition.hpp"

namespace orbitcodes {

// Sum of the per-shot subspace distances between two m-tuples.
int extended_distance(std::span<const Subspace> u, std::span<const Subspace> v);

struct TreeNode {
    int parent = -1;                // node index at the previous level
    std::vector<Subspace> members;  // sorted
};

class PartitionTree {
public:
    // Number of levels beyond the root (the root alone is depth 0).
    int depth() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<TreeNode>& level(int l) const;
    // p_l: children per node between levels l-1 and l.
    int child_count(int l) const;
    // Group whose orbits form level l (1 <= l <= depth).
    const FiniteGroup& level_group(int l) const;
    // Congruence class of a node: the index of its level-1 ancestor.
    int class_of(int level, int node) const;
    // Resolves an edge-label path (a_1 .. a_j) to the node it selects.
    int node_at_path(std::span<const int> path) const;
    const Subspace& representative(int level, int node) const;

private:
    friend PartitionTree build_alphabet_partition(std::vector<Subspace> alphabet,
                                                  const FiniteGroup& g,
                                                  const std::vector<FiniteGroup>& series);
    std::vector<std::vector<TreeNode>> levels_;  // levels_[0] = single root node
    std::vector<int> child_counts_;              // child_counts_[l] = p_l, entry 0 unused
    std::vector<FiniteGroup> groups_;            // groups_[l-1] generates level l
};

// Orbit decomposition of an action-closed alphabet, each orbit sorted and
// the orbit list ordered by least member.  Orbit sizes may differ.
std::vector<std::vector<Subspace>> group_orbits(std::vector<Subspace> alphabet,
                                                const FiniteGroup& g);

// Level 1 is the set of g-orbits of the alphabet; deeper levels refine by
// the nested series, which must end with the trivial group to reach
// singleton leaves.  All orbits on a level must have equal size (equal
// stabilizers), otherwise the partition is not nested and the call fails.
PartitionTree build_alphabet_partition(std::vector<Subspace> alphabet, const FiniteGroup& g,
                                       const std::vector<FiniteGroup>& series);

struct LevelDistanceReport {
    // Minimum over the level's subsets of their internal minimum distance;
    // empty when every subset is a singleton (unbounded).
    std::optional<int> value;
    // Scenario (i): evaluations using one representative subset per
    // congruence class and the paired-coset reduction.
    long long fast_count = 0;
    // Scenario (ii): C(x,2) per subset, all subsets.
    long long naive_count = 0;
};

LevelDistanceReport intrasubset_distance(const PartitionTree& tree, int level,
                                         int threads = 1);

// All-pairs scan per subset; the independent oracle for the fast value.
std::optional<int> intrasubset_distance_exhaustive(const PartitionTree& tree, int level,
                                                   int threads = 1);

class ComponentCode {
public:
    static ComponentCode full(int alphabet, int length, std::size_t cap = 100000);
    static ComponentCode repetition(int alphabet, int length);
    static ComponentCode single_parity(int alphabet, int length, std::size_t cap = 100000);
    static ComponentCode from_words(int alphabet, std::vector<std::vector<int>> words);
    // Built-in families by name: full | repetition | parity.
    static ComponentCode named(const std::string& name, int alphabet, int length);

    int alphabet() const { return alphabet_; }
    int length() const { return length_; }
    const std::vector<std::vector<int>>& words() const { return words_; }
    // Minimum Hamming distance by pairwise scan; empty for one-word codes.
    std::optional<int> min_hamming() const { return min_hamming_; }

private:
    ComponentCode(int alphabet, int length, std::vector<std::vector<int>> words);
    int alphabet_, length_;
    std::vector<std::vector<int>> words_;
    std::optional<int> min_hamming_;
};

struct ComponentValidation {
    int l_prime = 0;  // minimum level whose intrasubset distance reaches d
    bool ok = false;
    std::vector<std::string> level_reports;
};

// Checks d_S(level l-1) * d_H(component l) >= d for every coded level
// l = 1 .. L'.  The component list must supply exactly L' codes whose
// alphabets match the tree's child counts.
ComponentValidation validate_component_codes(const PartitionTree& tree,
                                             const std::vector<ComponentCode>& components,
                                             int design_distance);

class MultishotCode {
public:
    int length() const { return m_; }
    int design_distance() const { return design_distance_; }
    const std::vector<std::vector<Subspace>>& codewords() const { return codewords_; }
    int min_extended_distance() const;

private:
    friend MultishotCode assemble(const PartitionTree& tree,
                                  const std::vector<ComponentCode>& components,
                                  int design_distance);
    int m_ = 0;
    int design_distance_ = 0;
    std::vector<std::vector<Subspace>> codewords_;
};

// One codeword per choice of component codewords: column i's path through
// the tree selects the level-L' subset, whose representative becomes the
// i-th coordinate (the subset itself when leaves are singletons).
MultishotCode assemble(const PartitionTree& tree, const std::vector<ComponentCode>& components,
                       int design_distance);

}  // namespace orbitcodes
