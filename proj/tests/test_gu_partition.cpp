#include "doctest.h"

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "orbitcodes/gu_partition.hpp"

using namespace orbitcodes;

TEST_SUITE_BEGIN("gu_partition");

namespace {
Field gf64() {
    static Field f = FieldSpec::make(2, 1, 6, {1, 1, 0, 0, 0, 0, 1});
    return f;
}
Field gf16() {
    static Field f = FieldSpec::make(2, 1, 4, {1, 1, 0, 0, 1});
    return f;
}
FiniteGroup cyclic(const Field& f, long long step) {
    return FiniteGroup::generate({GroupElement::field_scalar(f, step)});
}
Subspace chain_point() {  // {0, a^0, a^8, a^10, a^20, a^48, a^59, a^61}
    return Subspace::from_field_elements(gf64(), {0, 8, 10, 20, 48, 59, 61});
}
}  // namespace

TEST_CASE("fair chain partition of a cyclic code: 63 = 3x21 = 9x7") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 1), chain_point());
    REQUIRE(code.size() == 63);

    GuPartition by3 = partition_by_subgroup(code, cyclic(f, 3));
    CHECK(by3.subcodes.size() == 3);
    for (const auto& s : by3.subcodes) CHECK(s.size() == 21);
    CHECK(is_fair(by3.subcodes));

    GuPartition by9 = partition_by_subgroup(code, cyclic(f, 9));
    CHECK(by9.subcodes.size() == 9);
    for (const auto& s : by9.subcodes) CHECK(s.size() == 7);
    CHECK(is_fair(by9.subcodes));
}

TEST_CASE("degenerate partitions: by the full group and by the identity") {
    Field f = gf16();
    OrbitCode code = OrbitCode::generate(cyclic(f, 1),
                                         Subspace::from_field_elements(f, {0, 1, 4}));
    GuPartition whole = partition_by_subgroup(code, cyclic(f, 1));
    CHECK(whole.subcodes.size() == 1);
    CHECK(whole.subcodes.front().size() == code.size());

    GuPartition singletons = partition_by_subgroup(code, cyclic(f, 0));
    CHECK(singletons.subcodes.size() == code.size());
    for (const auto& s : singletons.subcodes) CHECK(s.size() == 1);
}

TEST_CASE("subgroup containment and stabilizer containment are enforced") {
    Field f = gf16();
    OrbitCode code = OrbitCode::generate(cyclic(f, 3),
                                         Subspace::from_field_elements(f, {0, 1, 4}));
    CHECK_THROWS_AS(partition_by_subgroup(code, cyclic(f, 1)), std::invalid_argument);

    // the subfield point has a stabilizer of order 3 not inside <a^3>
    OrbitCode spreadish = OrbitCode::generate(cyclic(f, 1),
                                              Subspace::from_field_elements(f, {0, 5, 10}));
    CHECK_THROWS_AS(partition_by_subgroup(spreadish, cyclic(f, 3)), std::invalid_argument);
}

TEST_CASE("non-normal subgroups of a non-Abelian group are rejected") {
    Field f = gf64();
    FiniteGroup semi = FiniteGroup::generate(
        {GroupElement::field_scalar(f, 1), GroupElement::semilinear(f, 0, 1)});
    OrbitCode code = OrbitCode::generate(semi, chain_point());

    FiniteGroup frob_only = FiniteGroup::generate({GroupElement::semilinear(f, 0, 1)});
    CHECK_THROWS_AS(partition_by_subgroup(code, frob_only), std::invalid_argument);

    // the scalar subgroup is normal and partitions the semilinear orbit
    GuPartition p = partition_by_subgroup(code, cyclic(f, 1));
    CHECK(p.subcodes.size() * p.subcodes.front().size() == code.size());
}

TEST_CASE("subcode listing of the 21-codeword cyclic code partitioned into 7s") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 3), chain_point());
    REQUIRE(code.size() == 21);
    GuPartition p = partition_by_subgroup(code, cyclic(f, 9));
    REQUIRE(p.subcodes.size() == 3);

    // first subcode is the orbit of the base point under <a^9>
    std::set<std::vector<long long>> first;
    for (const Subspace& w : p.subcodes[0]) first.insert(w.element_exps(f));
    CHECK(first.count({0, 8, 10, 20, 48, 59, 61}) == 1);
    CHECK(first.count({5, 7, 9, 17, 19, 29, 57}) == 1);    // a^9 translate
    CHECK(first.count({3, 14, 16, 18, 26, 28, 38}) == 1);  // a^18 translate
    CHECK(first.size() == 7);

    // the translated subcodes start from a^3 V and a^6 V
    std::set<std::vector<long long>> second, third;
    for (const Subspace& w : p.subcodes[1]) second.insert(w.element_exps(f));
    for (const Subspace& w : p.subcodes[2]) third.insert(w.element_exps(f));
    CHECK(second.count({1, 3, 11, 13, 23, 51, 62}) == 1);
    CHECK(second.count({8, 10, 12, 20, 22, 32, 60}) == 1);  // a^12 translate
    CHECK(third.count({2, 4, 6, 14, 16, 26, 54}) == 1);
    CHECK(third.count({0, 11, 13, 15, 23, 25, 35}) == 1);   // a^15 translate
}

TEST_CASE("interdistance multisets of the translated subcodes: 7w^2 + 14w^4 + 28w^6") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 3), chain_point());
    GuPartition p = partition_by_subgroup(code, cyclic(f, 9));

    const DistanceMultiset expected{{2, 7}, {4, 14}, {6, 28}};
    CHECK(interdistance(p.subcodes[0], p.subcodes[1]) == expected);
    CHECK(interdistance(p.subcodes[0], p.subcodes[2]) == expected);

    const GroupElement a3 = GroupElement::field_scalar(f, 3);
    const GroupElement a6 = GroupElement::field_scalar(f, 6);
    CHECK(profile_polynomial(p, a3, 0) == ProfilePolynomial{{2, 7}, {4, 14}, {6, 28}});
    CHECK(profile_polynomial(p, a6, 0) == profile_polynomial(p, a3, 0));
    CHECK(polynomial_to_string(profile_polynomial(p, a3, 0)) == "7w^2 + 14w^4 + 28w^6");
}

TEST_CASE("identity-coset profile is the intradistance diagnostic") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 3), chain_point());
    GuPartition p = partition_by_subgroup(code, cyclic(f, 9));
    CHECK(profile_polynomial(p, p.subgroup_cosets[0].representative, 0) ==
          intradistance(p.subcodes[0]));
    CHECK_THROWS_AS(profile_polynomial(p, GroupElement::field_scalar(f, 1), 0),
                    std::invalid_argument);  // a^1 is outside the 21-element group
    CHECK_THROWS_AS(profile_polynomial(p, p.subgroup_cosets[1].representative, 9),
                    std::invalid_argument);
}

TEST_CASE("subgroups of Abelian groups pass the normality guard") {
    Field f = gf64();
    FiniteGroup g = cyclic(f, 1);
    CHECK(cyclic(f, 9).is_normal_in(g));
    CHECK(cyclic(f, 3).is_normal_in(g));
}

TEST_CASE("profile polynomials are invariant under inverting the coset") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 1), chain_point());
    GuPartition p = partition_by_subgroup(code, cyclic(f, 9));
    for (const Coset& c : p.subgroup_cosets) {
        CHECK(profile_polynomial(p, c.representative, 0) ==
              profile_polynomial(p, c.representative.inverse(), 0));
    }
}

TEST_CASE("interdistance rejects overlapping sets and counts |B1|*|B2| entries") {
    Field f = gf16();
    OrbitCode code = OrbitCode::generate(cyclic(f, 1),
                                         Subspace::from_field_elements(f, {0, 1, 4}));
    GuPartition p = partition_by_subgroup(code, cyclic(f, 3));
    CHECK_THROWS_AS(interdistance(p.subcodes[0], p.subcodes[0]), std::invalid_argument);

    long long total = 0;
    for (const auto& [d, c] : interdistance(p.subcodes[0], p.subcodes[1])) total += c;
    CHECK(total == static_cast<long long>(p.subcodes[0].size() * p.subcodes[1].size()));

    CHECK(intradistance(p.subcodes[0]).size() > 0);
    std::vector<Subspace> singleton{p.subcodes[0].front()};
    CHECK(intradistance(singleton).empty());
}

TEST_CASE("strong homogeneity holds for Abelian partitions") {
    Field f = gf64();
    OrbitCode code21 = OrbitCode::generate(cyclic(f, 3), chain_point());
    CHECK(is_strongly_homogeneous(partition_by_subgroup(code21, cyclic(f, 9))));

    OrbitCode code63 = OrbitCode::generate(cyclic(f, 1), chain_point());
    CHECK(is_strongly_homogeneous(partition_by_subgroup(code63, cyclic(f, 9))));

    // t = 1 partition is vacuously homogeneous
    CHECK(is_strongly_homogeneous(partition_by_subgroup(code21, cyclic(f, 3))));
}

TEST_CASE("hand-built unfair partitions are detected") {
    Field f = gf16();
    std::vector<Subspace> all = enumerate_grassmannian(f->base_ptr(), 4, 2);
    std::vector<std::vector<Subspace>> unequal{{all[0], all[1]}, {all[2]}};
    CHECK_FALSE(is_fair(unequal));
    std::vector<std::vector<Subspace>> repeated{{all[0], all[1]}, {all[0], all[1]}};
    CHECK_FALSE(is_fair(repeated));
}

TEST_CASE("reduced minimum distance: 28 evaluations and the value 4") {
    Field f = gf64();
    Subspace v = Subspace::from_field_elements(f, {0, 1, 4, 6, 16, 24, 33});
    OrbitCode code = OrbitCode::generate(cyclic(f, 1), v);
    FastMinDistance fast = fast_min_distance(code, cyclic(f, 9));
    CHECK(fast.min_distance == 4);
    CHECK(fast.computations == 28);
    CHECK(fast.intra_computations == 6);  // own-subcode safety scan, tracked separately
    CHECK_FALSE(fast.used_fallback);
    CHECK(predicted_fast_count(9, 7, 2) == 28);

    // the four single-point interdistance sets contain only 4s and 6s
    GuPartition p = partition_by_subgroup(code, cyclic(f, 9));
    for (int i = 1; i <= 4; ++i) {
        DistanceMultiset row;
        for (const Subspace& w : p.subcodes[static_cast<size_t>(i)])
            ++row[subspace_distance(v, w)];
        long long total = 0;
        for (const auto& [d, c] : row) {
            CHECK((d == 4 || d == 6));
            total += c;
        }
        CHECK(total == 7);
        CHECK(row.begin()->first == 4);
    }
}

TEST_CASE("reduced minimum distance matches the exhaustive oracle") {
    Field f16 = gf16();
    // every subgroup of the cyclic group, every point of G_2(4,2)
    std::vector<FiniteGroup> subgroups;
    for (long long step : {0, 5, 3, 1}) subgroups.push_back(cyclic(f16, step));
    for (const Subspace& v : enumerate_grassmannian(f16->base_ptr(), 4, 2)) {
        OrbitCode code = OrbitCode::generate(cyclic(f16, 1), v);
        if (code.size() < 2) continue;
        const int oracle = min_distance_exhaustive(code.codewords());
        for (const FiniteGroup& h : subgroups) {
            CHECK(fast_min_distance(code, h).min_distance == oracle);
            // whenever the coset decomposition exists it is fair
            if (h.contains_all(code.stabilizer()))
                CHECK(is_fair(partition_by_subgroup(code, h).subcodes));
        }
    }

    // spot checks in GF(2^6)
    Field f64 = gf64();
    std::vector<FiniteGroup> subgroups64;
    for (long long step : {0, 21, 9, 7, 3, 1}) subgroups64.push_back(cyclic(f64, step));
    for (int i = 0; i < 5; ++i) {
        Subspace v = testutil::random_subspace(f64->base_ptr(), 6, 3);
        OrbitCode code = OrbitCode::generate(cyclic(f64, 1), v);
        if (code.size() < 2) continue;
        const int oracle = min_distance_exhaustive(code.codewords());
        for (const FiniteGroup& h : subgroups64)
            CHECK(fast_min_distance(code, h).min_distance == oracle);
    }
}

TEST_CASE("index-two subgroup: a single interdistance set is evaluated") {
    Field f9 = FieldSpec::make(3, 1, 2, {2, 1, 1});  // x^2 + x + 2, primitive over F_3
    OrbitCode code = OrbitCode::generate(cyclic(f9, 1),
                                         Subspace::from_field_elements(f9, {0}));
    REQUIRE(code.size() == 4);  // all of G_3(2,1)
    FastMinDistance fast = fast_min_distance(code, cyclic(f9, 2));
    CHECK(fast.min_distance == min_distance_exhaustive(code.codewords()));
    CHECK(fast.min_distance == 2);
    CHECK(fast.computations == 2);  // one coset, subcode of two codewords
    CHECK_FALSE(fast.used_fallback);
}

TEST_CASE("fallback and degenerate subgroup choices") {
    Field f = gf64();
    FiniteGroup semi = FiniteGroup::generate(
        {GroupElement::field_scalar(f, 1), GroupElement::semilinear(f, 0, 1)});
    OrbitCode code = OrbitCode::generate(semi, chain_point());
    FastMinDistance fast = fast_min_distance(code, cyclic(f, 9));
    CHECK(fast.used_fallback);
    CHECK(fast.min_distance == min_distance_naive(code));

    // H = G leaves no nontrivial coset; everything lands in the own-subcode scan
    OrbitCode cyc = OrbitCode::generate(cyclic(f, 1), chain_point());
    FastMinDistance whole = fast_min_distance(cyc, cyclic(f, 1));
    CHECK_FALSE(whole.used_fallback);
    CHECK(whole.computations == 0);
    CHECK(whole.intra_computations == static_cast<long long>(cyc.size()) - 1);
    CHECK(whole.min_distance == min_distance_naive(cyc));
}

TEST_CASE("paired cosets alone can miss a minimum hidden inside the subgroup") {
    // the F_4-scalar translate a^21 V sits at distance 2 from V for this
    // point, and a^21 lies in the subgroups of order 3, 9 and 21: without
    // the own-subcode scan the reduced minimum would report 4
    Field f = gf64();
    Subspace v = [&]() {
        const GroupElement a21 = GroupElement::field_scalar(f, 21);
        for (const Subspace& s : enumerate_grassmannian(f->base_ptr(), 6, 3)) {
            if (subspace_distance(s, act(a21, s)) != 2) continue;
            bool wider_min_is_4 = true;
            for (long long e = 1; e <= 31 && wider_min_is_4; ++e) {
                if (e % 21 == 0) continue;
                if (subspace_distance(s, act(GroupElement::field_scalar(f, e), s)) < 4)
                    wider_min_is_4 = false;
            }
            if (wider_min_is_4 && OrbitCode::generate(cyclic(f, 1), s).size() == 63) return s;
        }
        throw std::logic_error("no witness point found");
    }();

    OrbitCode code = OrbitCode::generate(cyclic(f, 1), v);
    const int oracle = min_distance_exhaustive(code.codewords());
    CHECK(oracle == 2);
    for (long long step : {21, 7, 3}) {
        FastMinDistance fast = fast_min_distance(code, cyclic(f, step));
        CHECK(fast.min_distance == oracle);
        CHECK(fast.intra_computations > 0);
    }
}

TEST_CASE("chain partitions refine level by level") {
    Field f = gf64();
    OrbitCode code = OrbitCode::generate(cyclic(f, 1), chain_point());
    ChainPartition chain = chain_partition(code, {cyclic(f, 3), cyclic(f, 9)});
    REQUIRE(chain.levels.size() == 3);
    CHECK(chain.levels[0].size() == 1);
    CHECK(chain.levels[0][0].size() == 63);
    CHECK(chain.levels[1].size() == 3);
    CHECK(chain.levels[1][0].size() == 21);
    CHECK(chain.levels[2].size() == 9);
    CHECK(chain.levels[2][0].size() == 7);
    CHECK(is_fair_chain(chain.levels));

    // nestedness: every level-2 subcode sits inside one level-1 subcode
    for (const auto& fine : chain.levels[2]) {
        int parents = 0;
        for (const auto& coarse : chain.levels[1]) {
            std::set<Subspace> coarse_set(coarse.begin(), coarse.end());
            bool inside = true;
            for (const Subspace& w : fine)
                if (!coarse_set.count(w)) inside = false;
            if (inside) ++parents;
        }
        CHECK(parents == 1);
    }

    // trivial series: one level; series ending at the identity: singleton leaves
    CHECK(chain_partition(code, {}).levels.size() == 1);
    ChainPartition deep = chain_partition(code, {cyclic(f, 3), cyclic(f, 9), cyclic(f, 0)});
    CHECK(deep.levels.back().size() == 63);
    for (const auto& s : deep.levels.back()) CHECK(s.size() == 1);

    CHECK_THROWS_AS(chain_partition(code, {cyclic(f, 9), cyclic(f, 3)}), std::invalid_argument);
}

TEST_SUITE_END();
