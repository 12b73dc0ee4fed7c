#include "orbitcodes/finite_field.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace orbitcodes {

namespace {

// Full element tables are built eagerly, so cap the sizes at desk scale.
constexpr long long kMaxCardinality = 1LL << 16;
constexpr int kSupportedPrimes[] = {2, 3, 5, 7};

bool is_supported_prime(int p) {
    return std::find(std::begin(kSupportedPrimes), std::end(kSupportedPrimes), p) !=
           std::end(kSupportedPrimes);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Polynomials over a base field: coefficient vectors, low-to-high degree.
using Poly = std::vector<int>;

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& m, const BaseField& f) {
    const int dm = poly_degree(m);
    const int lead_inv = f.inv(m[static_cast<size_t>(dm)]);
    int da = poly_degree(a);
    while (da >= dm) {
        const int factor = f.mul(a[static_cast<size_t>(da)], lead_inv);
        for (int i = 0; i <= dm; ++i) {
            const size_t pos = static_cast<size_t>(da - dm + i);
            a[pos] = f.sub(a[pos], f.mul(factor, m[static_cast<size_t>(i)]));
        }
        da = poly_degree(a);
    }
    a.resize(static_cast<size_t>(dm), 0);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const BaseField& f) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1 .. deg/2.
bool poly_irreducible(const Poly& m, const BaseField& f) {
    const int deg = poly_degree(m);
    const int q = f.order();
    for (int d = 1; 2 * d <= deg; ++d) {
        const long long count = ipow(q, d);
        for (long long code = 0; code < count; ++code) {
            Poly div(static_cast<size_t>(d) + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[static_cast<size_t>(i)] = static_cast<int>(c % q);
                c /= q;
            }
            div[static_cast<size_t>(d)] = 1;
            if (poly_degree(poly_mod(m, div, f)) < 0) return false;
        }
    }
    return true;
}

// Multiplicative order of x in F_q[x]/<m>; m must be irreducible.
long long order_of_x(const Poly& m, const BaseField& f) {
    const int deg = poly_degree(m);
    Poly x(2, 0);
    x[1] = 1;
    Poly cur = poly_mod(x, m, f);
    const long long bound = ipow(f.order(), deg);
    for (long long k = 1; k <= bound; ++k) {
        if (poly_is_one(cur)) return k;
        cur = poly_mod(poly_mul(cur, x, f), m, f);
    }
    throw std::logic_error("order_of_x: no cycle found (polynomial not irreducible?)");
}

// Smallest-label monic primitive polynomial of degree t over F_p.
Poly find_primitive_poly(int t, const BaseField& fp) {
    const int p = fp.order();
    const long long count = ipow(p, t);
    for (long long code = 0; code < count; ++code) {
        Poly cand(static_cast<size_t>(t) + 1, 0);
        long long c = code;
        for (int i = 0; i < t; ++i) {
            cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
            c /= p;
        }
        cand[static_cast<size_t>(t)] = 1;
        if (!poly_irreducible(cand, fp)) continue;
        if (order_of_x(cand, fp) == count - 1) return cand;
    }
    throw std::logic_error("no primitive polynomial found");
}

long long packed_key(const std::vector<int>& coords, int q) {
    long long key = 0;
    for (size_t i = coords.size(); i-- > 0;) key = key * q + coords[i];
    return key;
}

}  // namespace

BaseFieldPtr BaseField::make(int p, int t) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (!is_supported_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) +
                                    " unsupported (supported primes: 2, 3, 5, 7)");
    if (t < 1) throw std::invalid_argument("base field degree must be >= 1");
    const long long q = ipow(p, t);
    if (q > 256) throw std::invalid_argument("base field order " + std::to_string(q) + " exceeds cap 256");

    auto f = std::shared_ptr<BaseField>(new BaseField());
    f->p_ = p;
    f->t_ = t;
    f->q_ = static_cast<int>(q);

    // Labels encode coefficient tuples over F_p in base p.
    std::vector<std::vector<int>> digits(static_cast<size_t>(q));
    for (int a = 0; a < q; ++a) {
        std::vector<int> d(static_cast<size_t>(t));
        int v = a;
        for (int i = 0; i < t; ++i) {
            d[static_cast<size_t>(i)] = v % p;
            v /= p;
        }
        digits[static_cast<size_t>(a)] = std::move(d);
    }
    auto label_of = [&](const std::vector<int>& d) {
        int v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return v;
    };

    BaseFieldPtr fp;
    Poly modulus;
    if (t > 1) {
        fp = BaseField::make(p, 1);
        modulus = find_primitive_poly(t, *fp);
    }

    f->add_table_.assign(static_cast<size_t>(q) * q, 0);
    f->mul_table_.assign(static_cast<size_t>(q) * q, 0);
    f->inv_table_.assign(static_cast<size_t>(q), 0);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> s(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i)
                s[static_cast<size_t>(i)] =
                    (digits[static_cast<size_t>(a)][static_cast<size_t>(i)] +
                     digits[static_cast<size_t>(b)][static_cast<size_t>(i)]) % p;
            f->add_table_[static_cast<size_t>(a) * q + b] = label_of(s);

            if (t == 1) {
                f->mul_table_[static_cast<size_t>(a) * q + b] = (a * b) % p;
            } else {
                Poly prod = poly_mod(poly_mul(digits[static_cast<size_t>(a)],
                                              digits[static_cast<size_t>(b)], *fp),
                                     modulus, *fp);
                prod.resize(static_cast<size_t>(t), 0);
                f->mul_table_[static_cast<size_t>(a) * q + b] = label_of(prod);
            }
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f->mul_table_[static_cast<size_t>(a) * q + b] == 1) {
                f->inv_table_[static_cast<size_t>(a)] = b;
                break;
            }
        }
    }
    return f;
}

int BaseField::add(int a, int b) const { return add_table_[static_cast<size_t>(a) * q_ + b]; }

int BaseField::neg(int a) const {
    // (p-1)*a in characteristic p
    int r = 0;
    for (int i = 0; i < p_ - 1; ++i) r = add(r, a);
    return r;
}

int BaseField::sub(int a, int b) const { return add(a, neg(b)); }

int BaseField::mul(int a, int b) const { return mul_table_[static_cast<size_t>(a) * q_ + b]; }

int BaseField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("inversion of zero");
    return inv_table_[static_cast<size_t>(a)];
}

int BaseField::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("inversion of zero");
        return 0;
    }
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool same_field(const BaseField& x, const BaseField& y) { return x == y; }

long long FieldElement::exp() const {
    if (exp_ < 0) throw std::invalid_argument("zero has no discrete log");
    return exp_;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    return same_field(*x.field_, *y.field_) && x.exp_ == y.exp_;
}

Field FieldSpec::make(int p, int t, int n, std::vector<int> poly_coeffs) {
    BaseFieldPtr base = BaseField::make(p, t);
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    const long long q = base->order();
    long long card = 1;
    for (int i = 0; i < n; ++i) {
        card *= q;
        if (card > kMaxCardinality)
            throw std::invalid_argument("field cardinality exceeds cap " + std::to_string(kMaxCardinality));
    }
    if (poly_coeffs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("polynomial must have n+1 coefficients");
    for (int c : poly_coeffs)
        if (!base->contains_label(c)) throw std::invalid_argument("polynomial coefficient outside F_q");
    if (poly_coeffs.back() != 1) throw std::invalid_argument("polynomial must be monic");

    if (!poly_irreducible(poly_coeffs, *base)) throw std::invalid_argument("reducible polynomial");
    if (order_of_x(poly_coeffs, *base) != card - 1)
        throw std::invalid_argument("polynomial is irreducible but not primitive");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->base_ = base;
    spec->n_ = n;
    spec->card_ = card;
    spec->poly_ = std::move(poly_coeffs);

    spec->exp_table_.reserve(static_cast<size_t>(card - 1));
    spec->log_table_.assign(static_cast<size_t>(card), -1);
    std::vector<int> cur(static_cast<size_t>(n), 0);
    cur[0] = 1;
    for (long long e = 0; e < card - 1; ++e) {
        spec->log_table_[static_cast<size_t>(packed_key(cur, static_cast<int>(q)))] = e;
        spec->exp_table_.push_back(cur);
        // multiply by the root: shift, then reduce the overflow term.
        std::vector<int> next(static_cast<size_t>(n), 0);
        for (int i = 1; i < n; ++i) next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        const int top = cur[static_cast<size_t>(n - 1)];
        if (top != 0)
            for (int i = 0; i < n; ++i)
                next[static_cast<size_t>(i)] =
                    base->sub(next[static_cast<size_t>(i)],
                              base->mul(top, spec->poly_[static_cast<size_t>(i)]));
        cur = std::move(next);
    }
    return spec;
}

Field FieldSpec::parse(std::string_view descriptor) {
    std::string s(descriptor);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
    const std::string prefix = "gf(";
    if (s.rfind(prefix, 0) != 0 || s.empty() || s.back() != ')')
        throw std::invalid_argument("field descriptor must look like gf(p,t,n,[c0,...,cn])");
    const std::string body = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    const size_t lb = body.find('[');
    const size_t rb = body.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("field descriptor missing coefficient list");
    std::vector<long long> head;
    {
        std::stringstream ss(body.substr(0, lb));
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) head.push_back(std::stoll(tok));
    }
    if (head.size() != 3) throw std::invalid_argument("field descriptor needs p, t, n");
    std::vector<int> coeffs;
    {
        std::stringstream ss(body.substr(lb + 1, rb - lb - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(static_cast<int>(std::stoll(tok)));
    }
    return make(static_cast<int>(head[0]), static_cast<int>(head[1]), static_cast<int>(head[2]), coeffs);
}

std::string FieldSpec::descriptor() const {
    std::ostringstream os;
    os << "gf(" << base_->characteristic() << "," << base_->degree() << "," << n_ << ",[";
    for (size_t i = 0; i < poly_.size(); ++i) {
        if (i) os << ",";
        os << poly_[i];
    }
    os << "])";
    return os.str();
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), -1, std::vector<int>(static_cast<size_t>(n_), 0));
}

FieldElement FieldSpec::one() const { return from_exp(0); }

FieldElement FieldSpec::generator() const { return from_exp(1); }

FieldElement FieldSpec::from_exp(long long e) const {
    const long long ord = card_ - 1;
    e = ((e % ord) + ord) % ord;
    return FieldElement(shared_from_this(), e, exp_table_[static_cast<size_t>(e)]);
}

FieldElement FieldSpec::from_coords(const std::vector<int>& coords) const {
    const long long e = exp_of_coords(coords);
    if (e < 0) return zero();
    return FieldElement(shared_from_this(), e, coords);
}

const std::vector<int>& FieldSpec::coords_of_exp(long long e) const {
    const long long ord = card_ - 1;
    e = ((e % ord) + ord) % ord;
    return exp_table_[static_cast<size_t>(e)];
}

long long FieldSpec::exp_of_coords(const std::vector<int>& coords) const {
    if (coords.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("coordinate vector has wrong length");
    for (int c : coords)
        if (!base_->contains_label(c)) throw std::invalid_argument("coordinate outside F_q");
    return log_table_[static_cast<size_t>(packed_key(coords, base_->order()))];
}

bool operator==(const FieldSpec& x, const FieldSpec& y) {
    return *x.base_ == *y.base_ && x.n_ == y.n_ && x.poly_ == y.poly_;
}

bool same_field(const FieldSpec& x, const FieldSpec& y) { return x == y; }

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(*a.field(), *b.field()))
        throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const FieldSpec& f = *a.field();
    const BaseField& base = f.base();
    std::vector<int> coords(a.coords().size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = base.add(a.coords()[i], b.coords()[i]);
    return f.from_coords(coords);
}

FieldElement neg(const FieldElement& a) {
    const FieldSpec& f = *a.field();
    const BaseField& base = f.base();
    std::vector<int> coords(a.coords().size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = base.neg(a.coords()[i]);
    return f.from_coords(coords);
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const FieldSpec& f = *a.field();
    if (a.is_zero() || b.is_zero()) return f.zero();
    return f.from_exp((a.exp() + b.exp()) % f.multiplicative_order());
}

FieldElement inv(const FieldElement& a) {
    const FieldSpec& f = *a.field();
    if (a.is_zero()) throw std::invalid_argument("inversion of zero");
    const long long ord = f.multiplicative_order();
    return f.from_exp((ord - a.exp()) % ord);
}

FieldElement pow(const FieldElement& a, long long e) {
    const FieldSpec& f = *a.field();
    if (a.is_zero()) {
        if (e == 0) return f.one();
        if (e < 0) throw std::invalid_argument("inversion of zero");
        return f.zero();
    }
    const long long ord = f.multiplicative_order();
    const long long ee = ((e % ord) + ord) % ord;
    return f.from_exp((a.exp() * ee) % ord);
}

FieldElement frobenius(const FieldElement& a, long long j) {
    const FieldSpec& f = *a.field();
    if (a.is_zero()) return f.zero();
    const long long n = f.extension_degree();
    j = ((j % n) + n) % n;
    long long qj = 1;
    for (long long i = 0; i < j; ++i) qj *= f.base().order();
    return f.from_exp((a.exp() * qj) % f.multiplicative_order());
}

std::vector<int> to_coords(const FieldElement& a) { return a.coords(); }

}  // namespace orbitcodes
