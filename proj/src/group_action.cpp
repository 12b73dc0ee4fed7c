#include "orbitcodes/group_action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitcodes {

namespace {

long long reduce_exp(long long e, long long ord) { return ((e % ord) + ord) % ord; }

long long q_power(const Field& f, long long j) {
    long long r = 1;
    for (long long i = 0; i < j; ++i) r *= f->base().order();
    return r;
}

MatrixFq matrix_power(MatrixFq base, long long e) {
    MatrixFq result = MatrixFq::identity(base.field_ptr(), base.rows());
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace

GroupElement GroupElement::general_linear(MatrixFq m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("group matrix must be square");
    if (m.rank() != m.rows()) throw std::invalid_argument("group matrix must be invertible");
    return GroupElement(Rep(GlElt{std::move(m)}));
}

GroupElement GroupElement::field_scalar(Field f, long long exp) {
    const long long ord = f->multiplicative_order();
    return GroupElement(Rep(ScalarElt{std::move(f), reduce_exp(exp, ord)}));
}

GroupElement GroupElement::semilinear(Field f, long long exp, long long frob) {
    const long long n = f->extension_degree();
    frob = reduce_exp(frob, n);
    if (frob == 0) return field_scalar(std::move(f), exp);
    const long long ord = f->multiplicative_order();
    return GroupElement(Rep(SemiElt{std::move(f), reduce_exp(exp, ord), static_cast<int>(frob)}));
}

GroupElement GroupElement::unipotent(MatrixFq displacement) {
    if (displacement.rows() != displacement.cols())
        throw std::invalid_argument("displacement block must be square");
    return GroupElement(Rep(UniElt{std::move(displacement)}));
}

GroupElement::Kind GroupElement::kind() const {
    switch (rep_.index()) {
        case 0: return Kind::general_linear;
        case 1: return Kind::field_scalar;
        case 2: return Kind::semilinear;
        default: return Kind::unipotent;
    }
}

const MatrixFq& GroupElement::matrix() const {
    if (kind() != Kind::general_linear) throw std::logic_error("not a general linear element");
    return std::get<GlElt>(rep_).m;
}

const MatrixFq& GroupElement::displacement() const {
    if (kind() != Kind::unipotent) throw std::logic_error("not a unipotent element");
    return std::get<UniElt>(rep_).h;
}

const Field& GroupElement::scalar_field() const {
    if (kind() == Kind::field_scalar) return std::get<ScalarElt>(rep_).f;
    if (kind() == Kind::semilinear) return std::get<SemiElt>(rep_).f;
    throw std::logic_error("element has no field context");
}

long long GroupElement::scalar_exp() const {
    if (kind() == Kind::field_scalar) return std::get<ScalarElt>(rep_).e;
    if (kind() == Kind::semilinear) return std::get<SemiElt>(rep_).e;
    throw std::logic_error("element has no scalar exponent");
}

int GroupElement::frobenius_power() const {
    if (kind() == Kind::field_scalar) return 0;
    if (kind() == Kind::semilinear) return std::get<SemiElt>(rep_).j;
    throw std::logic_error("element has no frobenius power");
}

bool GroupElement::is_identity() const {
    switch (kind()) {
        case Kind::general_linear: return matrix().is_identity();
        case Kind::field_scalar: return scalar_exp() == 0;
        case Kind::semilinear: return false;  // frob != 0 after normalization
        case Kind::unipotent: return displacement().is_zero();
    }
    return false;
}

GroupElement GroupElement::inverse() const {
    switch (kind()) {
        case Kind::general_linear:
            return general_linear(matrix().inverse());
        case Kind::field_scalar: {
            const long long ord = scalar_field()->multiplicative_order();
            return field_scalar(scalar_field(), (ord - scalar_exp()) % ord);
        }
        case Kind::semilinear: {
            const Field& f = scalar_field();
            const long long n = f->extension_degree();
            const long long ord = f->multiplicative_order();
            const long long jinv = (n - frobenius_power()) % n;
            const long long einv = (ord - (scalar_exp() * q_power(f, jinv)) % ord) % ord;
            return semilinear(f, einv, jinv);
        }
        case Kind::unipotent:
            return unipotent(-displacement());
    }
    throw std::logic_error("unreachable");
}

GroupElement GroupElement::identity_like(const GroupElement& g) {
    switch (g.kind()) {
        case Kind::general_linear:
            return general_linear(MatrixFq::identity(g.matrix().field_ptr(), g.matrix().rows()));
        case Kind::field_scalar:
        case Kind::semilinear:
            return field_scalar(g.scalar_field(), 0);
        case Kind::unipotent:
            return unipotent(MatrixFq(g.displacement().field_ptr(), g.displacement().rows(),
                                      g.displacement().cols()));
    }
    throw std::logic_error("unreachable");
}

std::string GroupElement::key() const {
    switch (kind()) {
        case Kind::general_linear: return "G:" + matrix().to_string();
        case Kind::field_scalar: return "S:" + std::to_string(scalar_exp());
        case Kind::semilinear:
            return "L:" + std::to_string(scalar_exp()) + "," + std::to_string(frobenius_power());
        case Kind::unipotent: return "U:" + displacement().to_string();
    }
    return {};
}

bool operator==(const GroupElement& x, const GroupElement& y) {
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case GroupElement::Kind::general_linear: return x.matrix() == y.matrix();
        case GroupElement::Kind::field_scalar: return x.scalar_exp() == y.scalar_exp();
        case GroupElement::Kind::semilinear:
            return x.scalar_exp() == y.scalar_exp() && x.frobenius_power() == y.frobenius_power();
        case GroupElement::Kind::unipotent: return x.displacement() == y.displacement();
    }
    return false;
}

bool operator<(const GroupElement& x, const GroupElement& y) {
    if (x.kind() != y.kind()) return static_cast<int>(x.kind()) < static_cast<int>(y.kind());
    switch (x.kind()) {
        case GroupElement::Kind::general_linear: return x.matrix() < y.matrix();
        case GroupElement::Kind::field_scalar: return x.scalar_exp() < y.scalar_exp();
        case GroupElement::Kind::semilinear: {
            if (x.scalar_exp() != y.scalar_exp()) return x.scalar_exp() < y.scalar_exp();
            return x.frobenius_power() < y.frobenius_power();
        }
        case GroupElement::Kind::unipotent: return x.displacement() < y.displacement();
    }
    return false;
}

namespace {

MatrixFq block_matrix_of(const MatrixFq& h) {
    const int r = h.rows();
    const BaseFieldPtr f = h.field_ptr();
    const MatrixFq top = MatrixFq::hstack(MatrixFq::identity(f, r), h);
    const MatrixFq bottom = MatrixFq::hstack(MatrixFq(f, r, r), MatrixFq::identity(f, r));
    return MatrixFq::vstack(top, bottom);
}

// Lift to an explicit general linear matrix where possible.
MatrixFq lift_matrix(const GroupElement& g) {
    switch (g.kind()) {
        case GroupElement::Kind::general_linear: return g.matrix();
        case GroupElement::Kind::unipotent: return block_matrix_of(g.displacement());
        case GroupElement::Kind::field_scalar:
            return matrix_power(alpha_action_matrix(g.scalar_field()), g.scalar_exp());
        case GroupElement::Kind::semilinear:
            throw std::invalid_argument("semilinear element with a frobenius twist has no matrix form");
    }
    throw std::logic_error("unreachable");
}

bool is_scalar_like(const GroupElement& g) {
    return g.kind() == GroupElement::Kind::field_scalar ||
           g.kind() == GroupElement::Kind::semilinear;
}

}  // namespace

GroupElement compose(const GroupElement& first, const GroupElement& then) {
    using K = GroupElement::Kind;
    const K a = first.kind(), b = then.kind();

    if (a == K::field_scalar && b == K::field_scalar) {
        if (!same_field(*first.scalar_field(), *then.scalar_field()))
            throw std::invalid_argument("scalar elements from different fields");
        return GroupElement::field_scalar(first.scalar_field(),
                                          first.scalar_exp() + then.scalar_exp());
    }
    if (is_scalar_like(first) && is_scalar_like(then)) {
        const Field& f = first.scalar_field();
        if (!same_field(*f, *then.scalar_field()))
            throw std::invalid_argument("semilinear elements from different fields");
        // (e1,j1) then (e2,j2): x -> s^(j1+j2)(x) * a^(e1*q^j2 + e2)
        const long long ord = f->multiplicative_order();
        const long long e = reduce_exp(first.scalar_exp() * q_power(f, then.frobenius_power()) +
                                           then.scalar_exp(),
                                       ord);
        return GroupElement::semilinear(f, e, first.frobenius_power() + then.frobenius_power());
    }
    if (a == K::unipotent && b == K::unipotent)
        return GroupElement::unipotent(first.displacement() + then.displacement());
    if (a == K::general_linear && b == K::general_linear)
        return GroupElement::general_linear(first.matrix() * then.matrix());

    // Mixed matrix-like variants compose through their matrix lifts.
    return GroupElement::general_linear(lift_matrix(first) * lift_matrix(then));
}

Subspace act(const GroupElement& g, const Subspace& v) {
    using K = GroupElement::Kind;
    switch (g.kind()) {
        case K::general_linear: {
            const MatrixFq& m = g.matrix();
            if (m.rows() != v.ambient_dim() || !same_field(m.field(), *v.field_ptr()))
                throw std::invalid_argument("incompatible ambient space for matrix action");
            return Subspace::from_rows(v.basis() * m);
        }
        case K::field_scalar:
        case K::semilinear: {
            const Field& f = g.scalar_field();
            if (f->extension_degree() != v.ambient_dim() ||
                !same_field(f->base(), *v.field_ptr()))
                throw std::invalid_argument("incompatible ambient space for scalar action");
            const long long ord = f->multiplicative_order();
            const long long qj = q_power(f, g.frobenius_power());
            MatrixFq rows(v.field_ptr(), v.dim(), v.ambient_dim());
            for (int i = 0; i < v.dim(); ++i) {
                const long long e = f->exp_of_coords(v.basis().row(i));
                const long long mapped = reduce_exp(e * qj + g.scalar_exp(), ord);
                const std::vector<int>& c = f->coords_of_exp(mapped);
                for (int j = 0; j < v.ambient_dim(); ++j) rows.set(i, j, c[static_cast<size_t>(j)]);
            }
            return Subspace::from_rows(rows);
        }
        case K::unipotent: {
            const MatrixFq& h = g.displacement();
            const int r = h.rows();
            if (v.ambient_dim() != 2 * r || !same_field(h.field(), *v.field_ptr()))
                throw std::invalid_argument("incompatible ambient space for unipotent action");
            // [A | B] -> [A | A*H + B]
            const MatrixFq left = v.basis().submatrix(0, 0, v.dim(), r);
            const MatrixFq right = v.basis().submatrix(0, r, v.dim(), r);
            return Subspace::from_rows(MatrixFq::hstack(left, left * h + right));
        }
    }
    throw std::logic_error("unreachable");
}

MatrixFq alpha_action_matrix(const Field& f) {
    const int n = f->extension_degree();
    MatrixFq m(f->base_ptr(), n, n);
    for (int i = 0; i < n; ++i) {
        const std::vector<int>& c = f->coords_of_exp(i + 1);
        for (int j = 0; j < n; ++j) m.set(i, j, c[static_cast<size_t>(j)]);
    }
    return m;
}

FiniteGroup FiniteGroup::generate(std::vector<GroupElement> generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    FiniteGroup g;
    g.generators_ = generators;

    std::set<std::string> seen;
    g.elements_.push_back(GroupElement::identity_like(generators.front()));
    seen.insert(g.elements_.back().key());

    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        for (const GroupElement& gen : generators) {
            GroupElement w = compose(g.elements_[i], gen);
            if (seen.insert(w.key()).second) {
                g.elements_.push_back(std::move(w));
                if (g.elements_.size() > cap)
                    throw std::runtime_error("group enumeration exceeded cap " + std::to_string(cap));
            }
        }
    }
    g.index_keys();
    return g;
}

FiniteGroup FiniteGroup::from_elements(std::vector<GroupElement> elements, bool verify) {
    if (elements.empty()) throw std::invalid_argument("group needs at least the identity");
    FiniteGroup g;
    std::set<std::string> seen;
    for (GroupElement& e : elements)
        if (seen.insert(e.key()).second) g.elements_.push_back(std::move(e));

    auto id = std::find_if(g.elements_.begin(), g.elements_.end(),
                           [](const GroupElement& e) { return e.is_identity(); });
    if (id == g.elements_.end()) throw std::invalid_argument("element list lacks the identity");
    std::rotate(g.elements_.begin(), id, id + 1);

    g.generators_ = g.elements_;
    g.index_keys();
    if (verify && !g.is_closed())
        throw std::invalid_argument("element list is not closed under composition");
    return g;
}

void FiniteGroup::index_keys() {
    sorted_keys_.clear();
    sorted_keys_.reserve(elements_.size());
    for (const GroupElement& e : elements_) sorted_keys_.push_back(e.key());
    std::sort(sorted_keys_.begin(), sorted_keys_.end());
}

const GroupElement& FiniteGroup::identity() const { return elements_.front(); }

bool FiniteGroup::contains(const GroupElement& g) const {
    return std::binary_search(sorted_keys_.begin(), sorted_keys_.end(), g.key());
}

bool FiniteGroup::contains_all(const FiniteGroup& h) const {
    for (const GroupElement& e : h.elements())
        if (!contains(e)) return false;
    return true;
}

bool FiniteGroup::is_abelian() const {
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (!(compose(generators_[i], generators_[j]) ==
                  compose(generators_[j], generators_[i])))
                return false;
    return true;
}

bool FiniteGroup::is_normal_in(const FiniteGroup& g) const {
    for (const GroupElement& x : g.elements()) {
        const GroupElement xi = x.inverse();
        for (const GroupElement& h : elements_)
            if (!contains(compose(compose(xi, h), x))) return false;
    }
    return true;
}

bool FiniteGroup::is_closed() const {
    for (const GroupElement& a : elements_)
        for (const GroupElement& b : elements_)
            if (!contains(compose(a, b))) return false;
    return true;
}

std::vector<Coset> cosets(const FiniteGroup& g, const FiniteGroup& h) {
    if (!g.contains_all(h)) throw std::invalid_argument("H is not a subgroup of G");
    if (g.size() % h.size() != 0) throw std::invalid_argument("subgroup order does not divide group order");

    std::vector<Coset> out;
    std::set<std::string> covered;
    for (const GroupElement& e : g.elements()) {
        if (covered.count(e.key())) continue;
        Coset c{e, {}};
        c.elements.reserve(h.size());
        for (const GroupElement& x : h.elements()) {
            GroupElement w = compose(e, x);
            covered.insert(w.key());
            c.elements.push_back(std::move(w));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<long long> composition_series_orders(long long group_order,
                                                 const std::vector<long long>* prime_indices) {
    if (group_order <= 1) throw std::invalid_argument("group order must be > 1");
    std::vector<long long> chain{group_order};
    long long cur = group_order;
    size_t hint = 0;
    while (cur > 1) {
        long long p;
        if (prime_indices) {
            if (hint >= prime_indices->size())
                throw std::invalid_argument("prime index list does not multiply to the group order");
            p = (*prime_indices)[hint++];
            if (p < 2 || cur % p != 0)
                throw std::invalid_argument("prime index " + std::to_string(p) +
                                            " does not divide " + std::to_string(cur));
        } else {
            p = 2;
            while (cur % p != 0) ++p;
        }
        cur /= p;
        chain.push_back(cur);
    }
    if (prime_indices && hint != prime_indices->size())
        throw std::invalid_argument("prime index list does not multiply to the group order");
    return chain;
}

bool is_invariant(const Subspace& v, const FiniteGroup& g) {
    for (const GroupElement& e : g.generators())
        if (!(act(e, v) == v)) return false;
    return true;
}

}  // namespace orbitcodes
