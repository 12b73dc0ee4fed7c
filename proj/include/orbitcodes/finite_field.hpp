#pragma once

// Arithmetic in prime fields F_p, base fields F_q with q = p^t, and
// extension fields GF(q^n) defined by a primitive polynomial.  Extension
// elements carry a dual representation: discrete-log exponent plus a
// coordinate vector over F_q in the polynomial basis {1, a, ..., a^(n-1)},
// where a is the root of the defining polynomial.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcodes {

class BaseField;
using BaseFieldPtr = std::shared_ptr<const BaseField>;

// F_q with q = p^t.  Elements are labels 0..q-1; a label encodes the
// coefficient tuple of a polynomial over F_p in base p (for t = 1 the
// label is just the residue).  All operations are table lookups.
class BaseField {
public:
    static BaseFieldPtr make(int p, int t = 1);

    int characteristic() const { return p_; }
    int degree() const { return t_; }
    int order() const { return q_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // a != 0
    int pow(int a, long long e) const;

    bool contains_label(int a) const { return a >= 0 && a < q_; }

    friend bool operator==(const BaseField& x, const BaseField& y) {
        return x.p_ == y.p_ && x.t_ == y.t_;
    }

private:
    BaseField() = default;
    int p_ = 0, t_ = 0, q_ = 0;
    std::vector<int> add_table_;  // q*q
    std::vector<int> mul_table_;  // q*q
    std::vector<int> inv_table_;  // q, entry 0 unused
};

bool same_field(const BaseField& x, const BaseField& y);

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldElement {
public:
    bool is_zero() const { return exp_ < 0; }
    // Discrete log of the element, in 0 .. q^n-2.  Throws on zero.
    long long exp() const;
    const std::vector<int>& coords() const { return coords_; }
    const Field& field() const { return field_; }

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

private:
    friend class FieldSpec;
    FieldElement(Field f, long long e, std::vector<int> c)
        : field_(std::move(f)), exp_(e), coords_(std::move(c)) {}

    Field field_;
    long long exp_;  // -1 for zero
    std::vector<int> coords_;
};

// GF(q^n) = F_q[x]/<p(x)> with p(x) primitive.  Construction builds the
// full exp/log tables; primitivity of the root is verified and reducible
// vs. irreducible-but-imprimitive polynomials are reported distinctly.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    // poly_coeffs: length n+1, low-to-high degree, labels in F_q, monic.
    static Field make(int p, int t, int n, std::vector<int> poly_coeffs);

    // Descriptor syntax: gf(p,t,n,[c0,c1,...,cn])
    static Field parse(std::string_view descriptor);
    std::string descriptor() const;

    const BaseField& base() const { return *base_; }
    const BaseFieldPtr& base_ptr() const { return base_; }
    int extension_degree() const { return n_; }
    long long cardinality() const { return card_; }
    long long multiplicative_order() const { return card_ - 1; }
    const std::vector<int>& modulus() const { return poly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;  // the root a, exponent 1
    FieldElement from_exp(long long e) const;
    FieldElement from_coords(const std::vector<int>& coords) const;

    const std::vector<int>& coords_of_exp(long long e) const;
    // -1 for the zero vector.
    long long exp_of_coords(const std::vector<int>& coords) const;

    friend bool operator==(const FieldSpec& x, const FieldSpec& y);

private:
    FieldSpec() = default;

    BaseFieldPtr base_;
    int n_ = 0;
    long long card_ = 0;
    std::vector<int> poly_;
    std::vector<std::vector<int>> exp_table_;  // card-1 entries
    std::vector<long long> log_table_;         // card entries keyed by packed coords
};

bool same_field(const FieldSpec& x, const FieldSpec& y);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);  // throws on zero
FieldElement pow(const FieldElement& a, long long e);
// a^(q^j).  frobenius(a, n) is the identity map.
FieldElement frobenius(const FieldElement& a, long long j);

std::vector<int> to_coords(const FieldElement& a);

}  // namespace orbitcodes
