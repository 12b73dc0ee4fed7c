#pragma once

// Abelian non-cyclic orbit codes from the maximal unipotent Abelian group
// of block matrices [[I,H],[0,I]]: rank-metric generator codes (Delsarte
// matrix view), the rank distance bound and its equality case, stabilizer
// solution spaces, and cardinality comparisons against the cyclic and
// semidirect-product constructions.

#include <vector>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes {

// F_q-linear space of r x r matrices with the minimum rank distance taken
// over the nonzero codewords (valid by linearity).
class RankMetricCode {
public:
    static RankMetricCode build(BaseFieldPtr field, int r, std::vector<MatrixFq> generators,
                                std::size_t cap = 1000000);

    const BaseFieldPtr& field_ptr() const { return field_; }
    int matrix_size() const { return r_; }
    const std::vector<MatrixFq>& generators() const { return generators_; }
    const std::vector<MatrixFq>& codewords() const { return codewords_; }  // sorted
    std::size_t size() const { return codewords_.size(); }
    int min_rank_distance() const { return min_rank_distance_; }

private:
    RankMetricCode() = default;
    BaseFieldPtr field_;
    int r_ = 0;
    std::vector<MatrixFq> generators_;
    std::vector<MatrixFq> codewords_;
    int min_rank_distance_ = 0;
};

// Generator matrices of the maximum-rank-distance code of q-degree
// r - target_d on GF(q^r): the right-action matrices of the maps
// x -> b * x^(q^i) for basis elements b and 0 <= i <= r - target_d.
// The resulting span has q^(r(r-target_d+1)) codewords and minimum rank
// distance target_d.
std::vector<MatrixFq> gabidulin_generators(const BaseFieldPtr& field, int r, int target_d);

// k-dimensional subspace of F_q^(2r) presented in the four-block shape
// [[A B],[C D]] with A,B on the first l rows.  When a plain k x n matrix
// is supplied the split defaults to l = k (C and D empty).
class BlockSubspaceLayout {
public:
    static BlockSubspaceLayout from_matrix(const MatrixFq& v, int split_l = -1);

    int r() const { return a_.cols(); }
    int k() const { return a_.rows() + c_.rows(); }
    int l() const { return a_.rows(); }
    const MatrixFq& a() const { return a_; }
    const MatrixFq& b() const { return b_; }
    const MatrixFq& c() const { return c_; }
    const MatrixFq& d() const { return d_; }

    MatrixFq stacked() const;  // [[A B],[C D]], rank k
    Subspace subspace() const;

private:
    BlockSubspaceLayout(MatrixFq a, MatrixFq b, MatrixFq c, MatrixFq d);
    MatrixFq a_, b_, c_, d_;
};

// The unipotent group {[[I,H],[0,I]] : H in rm} as explicit elements.
FiniteGroup unipotent_group(const RankMetricCode& rm);

// Orbit of the layout's subspace under the unipotent group of rm.  For
// k = r and V = [I A] the parameters are (2r, |rm|, 2*d_R(rm), r).
OrbitCode unipotent_orbit_code(const BlockSubspaceLayout& layout, const RankMetricCode& rm);

// Upper bound 2*rank([A*H; C*H]) on the distance moved by the unipotent
// element with displacement h.
int distance_bound(const BlockSubspaceLayout& layout, const MatrixFq& h);
// Equality case k = r, V = [I A]: the distance is exactly 2*rank(h).
int exact_distance_identity_layout(const MatrixFq& h);

// Basis of the displacement solution space {H : A*H = 0 and C*H = 0},
// whose block matrices stabilize the layout's subspace.  This is the whole
// displacement stabilizer exactly when the left block [A; C] has full row
// rank; otherwise row-space-preserving displacements outside it exist.
std::vector<MatrixFq> stabilizer_displacements(const BlockSubspaceLayout& layout);

struct CardinalityReport {
    long long q = 0;
    int n = 0;
    long long unipotent_size = 0;     // q^n
    long long semidirect_bound = 0;   // n (q^n - 1) / (q - 1)
    long long cyclic_bound = 0;       // (q^n - 1) / (q - 1)
    bool condition_q_minus_1_ge_n = false;
    bool unipotent_beats_semidirect = false;
};
CardinalityReport cardinality_comparison(long long q, int n);

// Parameter window p^(r-1) <= n-2k < k < n-k <= p^r = q of the earlier
// Abelian construction; exposed for comparison reporting only.
bool prior_abelian_constraint(long long p, int r, int n, int k);

}  // namespace orbitcodes
