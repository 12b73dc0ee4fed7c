#pragma once

// Points of the Grassmannian G_q(n,k) in canonical reduced-row-echelon
// form, the subspace metric, and small-parameter enumeration.

#include <compare>
#include <optional>
#include <vector>

#include "orbitcodes/matrix_fq.hpp"

namespace orbitcodes {

class Subspace {
public:
    // Span of the rows of m; the stored basis is the rref with zero rows
    // dropped, so row-equivalent inputs produce identical values.
    static Subspace from_rows(const MatrixFq& m);
    // Span of the listed nonzero elements a^i of GF(q^n), mapped to their
    // coordinate rows.
    static Subspace from_field_elements(const Field& f, const std::vector<long long>& exps);

    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const MatrixFq& basis() const { return basis_; }
    const BaseFieldPtr& field_ptr() const { return basis_.field_ptr(); }

    bool contains(const std::vector<int>& vec) const;
    // All q^k - 1 nonzero elements of the subspace as discrete logs in f,
    // sorted ascending.  f must match the ambient space.
    std::vector<long long> element_exps(const Field& f) const;

    friend bool operator==(const Subspace& x, const Subspace& y) { return x.basis_ == y.basis_; }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
    friend std::strong_ordering operator<=>(const Subspace& x, const Subspace& y) {
        return x.basis_ <=> y.basis_;
    }

private:
    explicit Subspace(MatrixFq basis) : basis_(std::move(basis)) {}
    MatrixFq basis_;  // k x n, rref, full rank
};

// dim V + dim W - 2 dim(V n W), computed as 2 rank([V;W]) - dim V - dim W.
int subspace_distance(const Subspace& v, const Subspace& w);

// Exact number of k-dimensional subspaces of F_q^n.
long long gaussian_binomial(int n, int k, long long q);

// Streams G_q(n,k) once each in a fixed order: lexicographic over rref
// pivot-column sets, then row-major over the free entries.
class GrassmannianEnumerator {
public:
    GrassmannianEnumerator(BaseFieldPtr field, int n, int k);
    std::optional<Subspace> next();

private:
    bool advance_pivots();
    void reset_free_positions();

    BaseFieldPtr field_;
    int n_, k_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_positions_;
    std::vector<int> free_values_;
    bool exhausted_ = false;
    bool fresh_pattern_ = true;
};

std::vector<Subspace> enumerate_grassmannian(BaseFieldPtr field, int n, int k,
                                             long long cap = 100000);

}  // namespace orbitcodes
