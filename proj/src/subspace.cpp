#include "orbitcodes/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitcodes {

Subspace Subspace::from_rows(const MatrixFq& m) {
    const MatrixFq r = m.rref();
    int k = 0;
    for (int i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero) break;  // rref sorts zero rows to the bottom
        ++k;
    }
    return Subspace(r.submatrix(0, 0, k, r.cols()));
}

Subspace Subspace::from_field_elements(const Field& f, const std::vector<long long>& exps) {
    MatrixFq m(f->base_ptr(), static_cast<int>(exps.size()), f->extension_degree());
    for (size_t i = 0; i < exps.size(); ++i) {
        const std::vector<int>& coords = f->coords_of_exp(exps[i]);
        for (int j = 0; j < f->extension_degree(); ++j) m.set(static_cast<int>(i), j, coords[static_cast<size_t>(j)]);
    }
    return from_rows(m);
}

bool Subspace::contains(const std::vector<int>& vec) const {
    if (static_cast<int>(vec.size()) != ambient_dim())
        throw std::invalid_argument("vector length does not match ambient dimension");
    MatrixFq v(field_ptr(), 1, ambient_dim());
    for (int j = 0; j < ambient_dim(); ++j) v.set(0, j, vec[static_cast<size_t>(j)]);
    return MatrixFq::vstack(basis_, v).rank() == dim();
}

std::vector<long long> Subspace::element_exps(const Field& f) const {
    if (!same_field(f->base(), *field_ptr()) || f->extension_degree() != ambient_dim())
        throw std::invalid_argument("field does not match the ambient space");
    const int q = f->base().order();
    const int k = dim();
    long long combos = 1;
    for (int i = 0; i < k; ++i) combos *= q;

    std::vector<long long> exps;
    std::vector<int> coeff(static_cast<size_t>(k), 0);
    for (long long idx = 1; idx < combos; ++idx) {
        long long v = idx;
        for (int i = 0; i < k; ++i) {
            coeff[static_cast<size_t>(i)] = static_cast<int>(v % q);
            v /= q;
        }
        std::vector<int> vec(static_cast<size_t>(ambient_dim()), 0);
        for (int i = 0; i < k; ++i) {
            if (coeff[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < ambient_dim(); ++j)
                vec[static_cast<size_t>(j)] = f->base().add(
                    vec[static_cast<size_t>(j)],
                    f->base().mul(coeff[static_cast<size_t>(i)], basis_.at(i, j)));
        }
        exps.push_back(f->exp_of_coords(vec));
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

int subspace_distance(const Subspace& v, const Subspace& w) {
    if (v.ambient_dim() != w.ambient_dim() || !same_field(*v.field_ptr(), *w.field_ptr()))
        throw std::invalid_argument("subspaces in different ambient spaces");
    const int sum_rank = MatrixFq::vstack(v.basis(), w.basis()).rank();
    return 2 * sum_rank - v.dim() - w.dim();
}

long long gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    k = std::min(k, n - k);
    // Every prefix of the product is itself a Gaussian binomial, so each
    // division below is exact.
    long long v = 1;
    for (int i = 0; i < k; ++i) {
        long long qn = 1, qk = 1;
        for (int j = 0; j < n - i; ++j)
            if (__builtin_mul_overflow(qn, q, &qn)) throw std::overflow_error("gaussian binomial overflow");
        for (int j = 0; j < i + 1; ++j)
            if (__builtin_mul_overflow(qk, q, &qk)) throw std::overflow_error("gaussian binomial overflow");
        if (__builtin_mul_overflow(v, qn - 1, &v)) throw std::overflow_error("gaussian binomial overflow");
        v /= (qk - 1);
    }
    return v;
}

GrassmannianEnumerator::GrassmannianEnumerator(BaseFieldPtr field, int n, int k)
    : field_(std::move(field)), n_(n), k_(k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    pivots_.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pivots_[static_cast<size_t>(i)] = i;
    reset_free_positions();
}

void GrassmannianEnumerator::reset_free_positions() {
    free_positions_.clear();
    std::vector<bool> is_pivot(static_cast<size_t>(n_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    for (int i = 0; i < k_; ++i)
        for (int j = pivots_[static_cast<size_t>(i)] + 1; j < n_; ++j)
            if (!is_pivot[static_cast<size_t>(j)]) free_positions_.emplace_back(i, j);
    free_values_.assign(free_positions_.size(), 0);
    fresh_pattern_ = true;
}

bool GrassmannianEnumerator::advance_pivots() {
    // next k-combination of {0..n-1} in lexicographic order
    int i = k_ - 1;
    while (i >= 0 && pivots_[static_cast<size_t>(i)] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++pivots_[static_cast<size_t>(i)];
    for (int j = i + 1; j < k_; ++j) pivots_[static_cast<size_t>(j)] = pivots_[static_cast<size_t>(j - 1)] + 1;
    reset_free_positions();
    return true;
}

std::optional<Subspace> GrassmannianEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (k_ == 0) {
        exhausted_ = true;
        return Subspace::from_rows(MatrixFq(field_, 0, n_));
    }
    if (!fresh_pattern_) {
        // advance the free-entry counter, last position fastest
        const int q = field_->order();
        int pos = static_cast<int>(free_values_.size()) - 1;
        while (pos >= 0) {
            if (++free_values_[static_cast<size_t>(pos)] < q) break;
            free_values_[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0 && !advance_pivots()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    fresh_pattern_ = false;

    MatrixFq m(field_, k_, n_);
    for (int i = 0; i < k_; ++i) m.set(i, pivots_[static_cast<size_t>(i)], 1);
    for (size_t t = 0; t < free_positions_.size(); ++t)
        m.set(free_positions_[t].first, free_positions_[t].second, free_values_[t]);
    return Subspace::from_rows(m);
}

std::vector<Subspace> enumerate_grassmannian(BaseFieldPtr field, int n, int k, long long cap) {
    const long long count = gaussian_binomial(n, k, field->order());
    if (count > cap)
        throw std::runtime_error("Grassmannian size " + std::to_string(count) +
                                 " exceeds enumeration cap " + std::to_string(cap));
    GrassmannianEnumerator en(field, n, k);
    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

}  // namespace orbitcodes
