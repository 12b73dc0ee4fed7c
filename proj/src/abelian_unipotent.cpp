#include "orbitcodes/abelian_unipotent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitcodes {

RankMetricCode RankMetricCode::build(BaseFieldPtr field, int r, std::vector<MatrixFq> generators,
                                     std::size_t cap) {
    if (r < 1) throw std::invalid_argument("matrix size must be >= 1");
    for (const MatrixFq& g : generators) {
        if (g.rows() != r || g.cols() != r)
            throw std::invalid_argument("generators must be r x r matrices");
        if (!same_field(g.field(), *field))
            throw std::invalid_argument("generator over the wrong field");
    }

    RankMetricCode code;
    code.field_ = field;
    code.r_ = r;
    code.generators_ = generators;

    // F_q-linear span: extend by one generator at a time.
    std::vector<MatrixFq> span{MatrixFq(field, r, r)};
    std::set<std::string> seen{span.front().to_string()};
    for (const MatrixFq& g : generators) {
        const std::vector<MatrixFq> snapshot = span;
        for (int c = 1; c < field->order(); ++c) {
            const MatrixFq scaled = g.scaled(c);
            for (const MatrixFq& s : snapshot) {
                MatrixFq w = s + scaled;
                if (seen.insert(w.to_string()).second) {
                    span.push_back(std::move(w));
                    if (span.size() > cap)
                        throw std::runtime_error("rank-metric span exceeded cap " +
                                                 std::to_string(cap));
                }
            }
        }
    }
    std::sort(span.begin(), span.end());
    code.codewords_ = std::move(span);

    code.min_rank_distance_ = r;
    for (const MatrixFq& w : code.codewords_) {
        if (w.is_zero()) continue;
        code.min_rank_distance_ = std::min(code.min_rank_distance_, w.rank());
    }
    return code;
}

std::vector<MatrixFq> gabidulin_generators(const BaseFieldPtr& field, int r, int target_d) {
    if (target_d < 1 || target_d > r) throw std::invalid_argument("need 1 <= target_d <= r");

    // GF(q^r) over F_q with the first primitive modulus in lexicographic
    // order, found by retrying candidate coefficient tuples.
    Field ext;
    {
        const long long q = field->order();
        long long count = 1;
        for (int i = 0; i < r; ++i) count *= q;
        for (long long code = 0; code < count && !ext; ++code) {
            std::vector<int> coeffs(static_cast<size_t>(r) + 1, 0);
            long long c = code;
            for (int i = 0; i < r; ++i) {
                coeffs[static_cast<size_t>(i)] = static_cast<int>(c % q);
                c /= q;
            }
            coeffs.back() = 1;
            try {
                ext = FieldSpec::make(field->characteristic(), field->degree(), r, coeffs);
            } catch (const std::invalid_argument&) {
            }
        }
        if (!ext) throw std::logic_error("no primitive modulus of the requested degree");
    }

    // Right-action matrix of x -> b * x^(q^i): row m holds the coordinates
    // of the image of the basis element a^m.
    std::vector<MatrixFq> gens;
    for (int i = 0; i <= r - target_d; ++i) {
        for (int b = 0; b < r; ++b) {
            MatrixFq m(field, r, r);
            for (int row = 0; row < r; ++row) {
                const FieldElement image = mul(ext->from_exp(b), frobenius(ext->from_exp(row), i));
                const std::vector<int>& coords = image.coords();
                for (int col = 0; col < r; ++col) m.set(row, col, coords[static_cast<size_t>(col)]);
            }
            gens.push_back(std::move(m));
        }
    }
    return gens;
}

BlockSubspaceLayout::BlockSubspaceLayout(MatrixFq a, MatrixFq b, MatrixFq c, MatrixFq d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

BlockSubspaceLayout BlockSubspaceLayout::from_matrix(const MatrixFq& v, int split_l) {
    if (v.cols() % 2 != 0) throw std::invalid_argument("ambient dimension must be even (n = 2r)");
    const int r = v.cols() / 2;
    const int k = v.rows();
    if (v.rank() != k) throw std::invalid_argument("layout matrix must have full row rank");
    const int l = split_l < 0 ? k : split_l;
    if (l < 0 || l > k) throw std::invalid_argument("row split outside 0..k");

    return BlockSubspaceLayout(v.submatrix(0, 0, l, r), v.submatrix(0, r, l, r),
                               v.submatrix(l, 0, k - l, r), v.submatrix(l, r, k - l, r));
}

MatrixFq BlockSubspaceLayout::stacked() const {
    return MatrixFq::vstack(MatrixFq::hstack(a_, b_), MatrixFq::hstack(c_, d_));
}

Subspace BlockSubspaceLayout::subspace() const { return Subspace::from_rows(stacked()); }

FiniteGroup unipotent_group(const RankMetricCode& rm) {
    std::vector<GroupElement> elems;
    elems.reserve(rm.size());
    for (const MatrixFq& h : rm.codewords()) elems.push_back(GroupElement::unipotent(h));
    // the span is linear, hence closed under the block product
    return FiniteGroup::from_elements(std::move(elems), /*verify=*/false);
}

OrbitCode unipotent_orbit_code(const BlockSubspaceLayout& layout, const RankMetricCode& rm) {
    if (layout.r() != rm.matrix_size())
        throw std::invalid_argument("layout block size does not match the rank-metric code");
    return OrbitCode::generate(unipotent_group(rm), layout.subspace());
}

int distance_bound(const BlockSubspaceLayout& layout, const MatrixFq& h) {
    return 2 * MatrixFq::vstack(layout.a() * h, layout.c() * h).rank();
}

int exact_distance_identity_layout(const MatrixFq& h) { return 2 * h.rank(); }

std::vector<MatrixFq> stabilizer_displacements(const BlockSubspaceLayout& layout) {
    // column h_j of H must lie in the kernel of [A; C]
    const MatrixFq kernel = MatrixFq::vstack(layout.a(), layout.c()).null_space();
    const int r = layout.r();
    std::vector<MatrixFq> basis;
    for (int u = 0; u < kernel.cols(); ++u)
        for (int j = 0; j < r; ++j) {
            MatrixFq m(layout.a().field_ptr(), r, r);
            for (int i = 0; i < r; ++i) m.set(i, j, kernel.at(i, u));
            basis.push_back(std::move(m));
        }
    return basis;
}

CardinalityReport cardinality_comparison(long long q, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("need even n = 2r");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    CardinalityReport rep;
    rep.q = q;
    rep.n = n;
    rep.unipotent_size = 1;
    for (int i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(rep.unipotent_size, q, &rep.unipotent_size))
            throw std::overflow_error("cardinality overflow");
    }
    rep.cyclic_bound = (rep.unipotent_size - 1) / (q - 1);
    rep.semidirect_bound = n * rep.cyclic_bound;
    rep.condition_q_minus_1_ge_n = (q - 1 >= n);
    rep.unipotent_beats_semidirect = rep.unipotent_size > rep.semidirect_bound;
    return rep;
}

bool prior_abelian_constraint(long long p, int r, int n, int k) {
    long long pr1 = 1, pr = 1;
    for (int i = 0; i < r - 1; ++i) pr1 *= p;
    for (int i = 0; i < r; ++i) pr *= p;
    return pr1 <= n - 2 * k && n - 2 * k < k && k < n - k && n - k <= pr;
}

}  // namespace orbitcodes
