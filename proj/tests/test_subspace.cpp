#include "doctest.h"

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "orbitcodes/subspace.hpp"

using namespace orbitcodes;

TEST_SUITE_BEGIN("subspace");

namespace {
Field gf64() {
    static Field f = FieldSpec::make(2, 1, 6, {1, 1, 0, 0, 0, 0, 1});
    return f;
}
Field gf16() {
    static Field f = FieldSpec::make(2, 1, 4, {1, 1, 0, 0, 1});
    return f;
}
}  // namespace

TEST_CASE("from_rows canonicalizes row-equivalent inputs") {
    BaseFieldPtr f3 = BaseField::make(3);
    MatrixFq m1 = MatrixFq::parse(f3, "1,2,0,1;0,1,1,0");
    MatrixFq m2 = MatrixFq::parse(f3, "2,1,0,2;1,0,1,1");  // 2*r1, r1+r2
    CHECK(Subspace::from_rows(m1) == Subspace::from_rows(m2));
    CHECK(Subspace::from_rows(m1).dim() == 2);
}

TEST_CASE("ternary block matrix spans a 3-dimensional subspace of F_3^6") {
    BaseFieldPtr f3 = BaseField::make(3);
    MatrixFq v = MatrixFq::parse(f3, "1,0,0,1,2,0;0,1,0,1,0,0;0,0,1,0,2,1");
    Subspace s = Subspace::from_rows(v);
    CHECK(s.dim() == 3);
    CHECK(s.ambient_dim() == 6);
}

TEST_CASE("subspace from field elements: span of {1, a, a^4} in GF(2^4)") {
    // a^4 = a + 1, so the span is {0, 1, a, a^4}: dimension 2.
    Subspace s = Subspace::from_field_elements(gf16(), {0, 1, 4});
    CHECK(s.dim() == 2);
    CHECK(s.element_exps(gf16()) == std::vector<long long>{0, 1, 4});
}

TEST_CASE("distance axioms") {
    Subspace v = Subspace::from_field_elements(gf16(), {0, 1, 4});
    CHECK(subspace_distance(v, v) == 0);

    BaseFieldPtr f2 = BaseField::make(2);
    // two disjoint 3-dim subspaces of F_2^6
    Subspace a = Subspace::from_rows(MatrixFq::parse(f2, "1,0,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0"));
    Subspace b = Subspace::from_rows(MatrixFq::parse(f2, "0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,1"));
    CHECK(subspace_distance(a, b) == 6);

    Subspace w = Subspace::from_field_elements(gf64(), {0, 1});
    CHECK_THROWS_AS(subspace_distance(v, w), std::invalid_argument);
}

TEST_CASE("metric properties on all of G_2(4,2)") {
    BaseFieldPtr f2 = BaseField::make(2);
    std::vector<Subspace> all = enumerate_grassmannian(f2, 4, 2);
    REQUIRE(all.size() == 35);

    const size_t n = all.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d[i][j] = subspace_distance(all[i], all[j]);

    for (size_t i = 0; i < n; ++i) {
        CHECK(d[i][i] == 0);
        for (size_t j = 0; j < n; ++j) {
            CHECK(d[i][j] == d[j][i]);
            CHECK(d[i][j] % 2 == 0);  // equal dimensions force even distance
            if (i != j) CHECK(d[i][j] > 0);
            for (size_t k = 0; k < n; ++k) CHECK(d[i][k] <= d[i][j] + d[j][k]);
        }
    }
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(5, 5, 2) == 1);
    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), std::invalid_argument);
}

TEST_CASE("enumeration matches the counting formula and is duplicate-free") {
    struct Case { int n, k; int q; };
    for (Case c : {Case{4, 2, 2}, Case{6, 3, 2}, Case{4, 2, 3}}) {
        BaseFieldPtr f = BaseField::make(c.q);
        std::vector<Subspace> all = enumerate_grassmannian(f, c.n, c.k);
        CHECK(static_cast<long long>(all.size()) == gaussian_binomial(c.n, c.k, c.q));
        std::set<Subspace> dedup(all.begin(), all.end());
        CHECK(dedup.size() == all.size());
        for (const Subspace& s : all) {
            CHECK(s.dim() == c.k);
            CHECK(s.ambient_dim() == c.n);
        }
    }
}

TEST_CASE("enumeration is deterministic and restartable") {
    BaseFieldPtr f2 = BaseField::make(2);
    GrassmannianEnumerator e1(f2, 4, 2), e2(f2, 4, 2);
    for (int i = 0; i < 35; ++i) {
        auto a = e1.next(), b = e2.next();
        REQUIRE(a.has_value());
        CHECK(*a == *b);
    }
    CHECK(!e1.next().has_value());
}

TEST_CASE("enumeration cap is enforced") {
    BaseFieldPtr f2 = BaseField::make(2);
    CHECK_THROWS_AS(enumerate_grassmannian(f2, 6, 3, 1000), std::runtime_error);
}

TEST_SUITE_END();
