#pragma once

// Group elements acting as isometries on subspaces: general linear
// matrices, field scalars a^i (cyclic shifts), semilinear pairs
// (a^i, frobenius^j), and unipotent block matrices [[I,H],[0,I]].
// Plus finite-group enumeration, cosets and cyclic composition series.
//
// Composition convention: compose(g1, g2) applies g1 first, then g2,
// so act(g2, act(g1, V)) == act(compose(g1, g2), V).  A semilinear pair
// (a^i, s^j) sends x to s^j(x) * a^i; with this choice conjugating the
// scalar a by s gives the scalar a^q.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

class GroupElement {
public:
    enum class Kind { general_linear, field_scalar, semilinear, unipotent };

    static GroupElement general_linear(MatrixFq m);  // must be invertible
    static GroupElement field_scalar(Field f, long long exp);
    // frob is reduced mod n; frob == 0 collapses to field_scalar.
    static GroupElement semilinear(Field f, long long exp, long long frob);
    static GroupElement unipotent(MatrixFq displacement);  // r x r block H

    Kind kind() const;
    const MatrixFq& matrix() const;        // general_linear only
    const MatrixFq& displacement() const;  // unipotent only
    const Field& scalar_field() const;     // field_scalar / semilinear
    long long scalar_exp() const;
    int frobenius_power() const;  // 0 for field_scalar

    bool is_identity() const;
    GroupElement inverse() const;
    // Identity element of the same variant/context as g.
    static GroupElement identity_like(const GroupElement& g);

    // Canonical byte encoding, unique per element within a variant family.
    std::string key() const;

    friend GroupElement compose(const GroupElement& first, const GroupElement& then);
    friend Subspace act(const GroupElement& g, const Subspace& v);
    friend bool operator==(const GroupElement& x, const GroupElement& y);
    friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
    friend bool operator<(const GroupElement& x, const GroupElement& y);

private:
    struct GlElt { MatrixFq m; };
    struct ScalarElt { Field f; long long e; };
    struct SemiElt { Field f; long long e; int j; };
    struct UniElt { MatrixFq h; };
    using Rep = std::variant<GlElt, ScalarElt, SemiElt, UniElt>;

    explicit GroupElement(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

GroupElement compose(const GroupElement& first, const GroupElement& then);
Subspace act(const GroupElement& g, const Subspace& v);

// Right-action matrix of multiplication by the root a: row i holds the
// coordinates of a^(i+1), so v * M are the coordinates of a*x for x with
// coordinate row v.  Equates the matrix and field-scalar actions.
MatrixFq alpha_action_matrix(const Field& f);

class FiniteGroup {
public:
    // Breadth-first closure of the generators under composition.
    static FiniteGroup generate(std::vector<GroupElement> generators, std::size_t cap = 1000000);
    // Wraps an element list already known to be a group.  With verify set,
    // closure under composition is checked.
    static FiniteGroup from_elements(std::vector<GroupElement> elements, bool verify = true);

    std::size_t size() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const GroupElement& identity() const;

    bool contains(const GroupElement& g) const;
    bool contains_all(const FiniteGroup& h) const;
    // Checked on generators only, which suffices.
    bool is_abelian() const;
    bool is_normal_in(const FiniteGroup& g) const;
    bool is_closed() const;

private:
    FiniteGroup() = default;
    void index_keys();

    std::vector<GroupElement> elements_;  // identity first, then discovery order
    std::vector<GroupElement> generators_;
    std::vector<std::string> sorted_keys_;
};

struct Coset {
    GroupElement representative;
    std::vector<GroupElement> elements;
};

// Left cosets rep*H covering g; the first coset is H itself with the
// identity as representative.
std::vector<Coset> cosets(const FiniteGroup& g, const FiniteGroup& h);

// Chain of subgroup orders with prime indices, e.g. 63 -> 21 -> 7 -> 1.
// Defaults to dividing by the smallest prime factor first; callers may
// override the sequence of prime indices.
std::vector<long long> composition_series_orders(long long group_order,
                                                 const std::vector<long long>* prime_indices = nullptr);

// Diagnostic: true iff act(g, v) == v for every element of g.
bool is_invariant(const Subspace& v, const FiniteGroup& g);

}  // namespace orbitcodes
