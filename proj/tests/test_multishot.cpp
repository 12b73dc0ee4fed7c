#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "orbitcodes/multishot.hpp"
#include "orbitcodes/orbit_code.hpp"

using namespace orbitcodes;

TEST_SUITE_BEGIN("multishot");

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

// G_2(6,3) with the spread orbit removed: 1386 subspaces in 22 cyclic orbits.
std::vector<Subspace> punctured_alphabet() {
    Field f = gf64();
    std::vector<Subspace> all = enumerate_grassmannian(f->base_ptr(), 6, 3);
    const OrbitCode spread_orbit = spread_code(f, 3);
    std::set<Subspace> spread(spread_orbit.codewords().begin(), spread_orbit.codewords().end());
    std::vector<Subspace> out;
    for (Subspace& s : all)
        if (!spread.count(s)) out.push_back(std::move(s));
    return out;
}

// the two 15-element cyclic orbits of G_2(4,2)
std::vector<Subspace> toy_alphabet() {
    Field f = gf16();
    OrbitCode c1 = OrbitCode::generate(cyclic(f, 1), Subspace::from_field_elements(f, {0, 1, 4}));
    OrbitCode c2 = OrbitCode::generate(cyclic(f, 1), Subspace::from_field_elements(f, {0, 2, 8}));
    std::vector<Subspace> out(c1.codewords().begin(), c1.codewords().end());
    out.insert(out.end(), c2.codewords().begin(), c2.codewords().end());
    return out;
}
}  // namespace

TEST_CASE("extended distance is an additive metric") {
    Field f = gf16();
    Subspace a = Subspace::from_field_elements(f, {0, 1, 4});
    Subspace b = act(GroupElement::field_scalar(f, 1), a);
    std::vector<Subspace> u{a, a}, v{b, a}, w{a, b};

    CHECK(extended_distance(u, u) == 0);
    CHECK(extended_distance(u, v) == subspace_distance(a, b));
    // per-shot distances add up
    std::vector<Subspace> x{b, b};
    CHECK(extended_distance(u, x) == 2 * subspace_distance(a, b));

    for (int i = 0; i < 30; ++i) {
        std::vector<Subspace> t1{testutil::random_subspace(f->base_ptr(), 4, 2),
                                 testutil::random_subspace(f->base_ptr(), 4, 2)};
        std::vector<Subspace> t2{testutil::random_subspace(f->base_ptr(), 4, 2),
                                 testutil::random_subspace(f->base_ptr(), 4, 2)};
        std::vector<Subspace> t3{testutil::random_subspace(f->base_ptr(), 4, 2),
                                 testutil::random_subspace(f->base_ptr(), 4, 2)};
        CHECK(extended_distance(t1, t2) == extended_distance(t2, t1));
        CHECK(extended_distance(t1, t3) <= extended_distance(t1, t2) + extended_distance(t2, t3));
    }
    std::vector<Subspace> bad{a};
    CHECK_THROWS_AS(extended_distance(u, bad), std::invalid_argument);
}

TEST_CASE("punctured Grassmannian splits into 22 cyclic orbits of 63") {
    Field f = gf64();
    std::vector<Subspace> s = punctured_alphabet();
    REQUIRE(s.size() == 1386);
    std::vector<std::vector<Subspace>> orbits = group_orbits(s, cyclic(f, 1));
    CHECK(orbits.size() == 22);
    for (const auto& o : orbits) CHECK(o.size() == 63);
}

TEST_CASE("semilinear orbits merge the cyclic ones with sizes 378/126/189") {
    Field f = gf64();
    FiniteGroup semi = FiniteGroup::generate(
        {GroupElement::field_scalar(f, 1), GroupElement::semilinear(f, 0, 1)});
    std::vector<std::vector<Subspace>> orbits = group_orbits(punctured_alphabet(), semi);
    std::multiset<size_t> sizes;
    for (const auto& o : orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<size_t>{126, 126, 189, 189, 378, 378});
}

TEST_CASE("the six listed representatives generate the six semilinear orbits") {
    Field f = gf64();
    FiniteGroup semi = FiniteGroup::generate(
        {GroupElement::field_scalar(f, 1), GroupElement::semilinear(f, 0, 1)});
    struct Rep {
        std::vector<long long> exps;
        size_t orbit_size;
    };
    const std::vector<Rep> reps{
        {{0, 1, 4, 6, 16, 24, 33}, 126},  {{0, 1, 2, 6, 7, 12, 26}, 378},
        {{7, 16, 18, 28, 32, 49, 52}, 189}, {{1, 3, 12, 13, 18, 26, 48}, 378},
        {{1, 18, 22, 29, 42, 43, 48}, 126}, {{4, 17, 26, 39, 54, 61, 62}, 189},
    };
    std::set<Subspace> seen_bases;
    size_t total = 0;
    for (const Rep& rep : reps) {
        Subspace v = Subspace::from_field_elements(f, rep.exps);
        REQUIRE(v.dim() == 3);
        CHECK(v.element_exps(f) == rep.exps);
        OrbitCode orbit = OrbitCode::generate(semi, v);
        CHECK(orbit.size() == rep.orbit_size);
        // distinct orbits: no previously seen representative reappears
        for (const Subspace& b : seen_bases) CHECK_FALSE(orbit.contains(b));
        seen_bases.insert(v);
        total += orbit.size();
    }
    CHECK(total == 1386);
}

TEST_CASE("full Grassmannian cannot be partitioned into equal cyclic orbits") {
    Field f = gf64();
    std::vector<Subspace> all = enumerate_grassmannian(f->base_ptr(), 6, 3);
    CHECK_THROWS_WITH_AS(build_alphabet_partition(all, cyclic(f, 1), {}),
                         doctest::Contains("unequal stabilizers"), std::invalid_argument);
}

TEST_CASE("alphabet must be closed under the action") {
    Field f = gf64();
    std::vector<Subspace> s = punctured_alphabet();
    s.pop_back();
    CHECK_THROWS_WITH_AS(build_alphabet_partition(s, cyclic(f, 1), {}),
                         doctest::Contains("not closed"), std::invalid_argument);
}

TEST_CASE("level structure and reduced counts of the punctured-alphabet tree") {
    Field f = gf64();
    PartitionTree tree = build_alphabet_partition(
        punctured_alphabet(), cyclic(f, 1), {cyclic(f, 3), cyclic(f, 9), cyclic(f, 0)});

    REQUIRE(tree.depth() == 4);
    CHECK(tree.level(1).size() == 22);
    CHECK(tree.level(2).size() == 66);
    CHECK(tree.level(3).size() == 198);
    CHECK(tree.level(4).size() == 1386);
    CHECK(tree.child_count(1) == 22);
    CHECK(tree.child_count(2) == 3);
    CHECK(tree.child_count(3) == 3);
    CHECK(tree.child_count(4) == 7);

    LevelDistanceReport g1 = intrasubset_distance(tree, 1);
    CHECK(g1.fast_count == 616);
    CHECK(g1.naive_count == 42966);
    LevelDistanceReport g2 = intrasubset_distance(tree, 2);
    CHECK(g2.fast_count == 154);
    CHECK(g2.naive_count == 13860);
    LevelDistanceReport g3 = intrasubset_distance(tree, 3);
    CHECK(g3.fast_count == 132);
    CHECK(g3.naive_count == 4158);

    // the reduced values agree with the all-pairs oracle
    CHECK(g1.value == intrasubset_distance_exhaustive(tree, 1, 2));
    CHECK(g2.value == intrasubset_distance_exhaustive(tree, 2, 2));
    CHECK(g3.value == intrasubset_distance_exhaustive(tree, 3, 2));
    CHECK(g1.value == 2);
    CHECK(g2.value == 2);
    CHECK(g3.value == 4);

    // singleton leaves are unbounded
    LevelDistanceReport g4 = intrasubset_distance(tree, 4);
    CHECK_FALSE(g4.value.has_value());
    CHECK(g4.fast_count == 0);
    CHECK(g4.naive_count == 0);
}

TEST_CASE("fairness of the punctured-alphabet tree holds within congruence classes") {
    Field f = gf64();
    PartitionTree tree = build_alphabet_partition(
        punctured_alphabet(), cyclic(f, 1), {cyclic(f, 3), cyclic(f, 9), cyclic(f, 0)});

    // the 22 top orbits are equal-sized but fall into exactly three
    // congruence types, one per pair of merged semilinear families
    std::set<DistanceMultiset> level1_types;
    for (const TreeNode& n : tree.level(1)) level1_types.insert(intradistance(n.members));
    CHECK(level1_types.size() == 3);

    // below level 1, the subsets descending from one orbit are subcodes of
    // a single geometrically uniform partition, hence mutually congruent
    for (int l = 2; l <= 3; ++l) {
        std::map<int, std::vector<std::vector<Subspace>>> by_class;
        for (size_t n = 0; n < tree.level(l).size(); ++n)
            by_class[tree.class_of(l, static_cast<int>(n))].push_back(
                tree.level(l)[static_cast<size_t>(n)].members);
        for (const auto& [cls, parts] : by_class) CHECK(is_fair(parts));
    }
}

TEST_CASE("paths select nodes deterministically") {
    Field f = gf16();
    PartitionTree tree =
        build_alphabet_partition(toy_alphabet(), cyclic(f, 1), {cyclic(f, 3), cyclic(f, 0)});
    REQUIRE(tree.depth() == 3);
    CHECK(tree.child_count(1) == 2);
    CHECK(tree.child_count(2) == 3);
    CHECK(tree.child_count(3) == 5);

    // walking all paths visits every node exactly once
    std::set<int> seen;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 3; ++a2) {
            std::vector<int> path{a1, a2};
            seen.insert(tree.node_at_path(path));
        }
    CHECK(seen.size() == 6);

    std::vector<int> bad{2, 0};
    CHECK_THROWS_AS(tree.node_at_path(bad), std::invalid_argument);

    // representative is the least member of its subset
    const TreeNode& node = tree.level(2)[3];
    CHECK(tree.representative(2, 3) == node.members.front());
}

TEST_CASE("component code families") {
    ComponentCode full = ComponentCode::full(3, 2);
    CHECK(full.words().size() == 9);
    CHECK(full.min_hamming() == 1);

    ComponentCode rep = ComponentCode::repetition(3, 2);
    CHECK(rep.words().size() == 3);
    CHECK(rep.min_hamming() == 2);

    ComponentCode parity = ComponentCode::single_parity(3, 3);
    CHECK(parity.words().size() == 9);
    CHECK(parity.min_hamming() == 2);

    ComponentCode one = ComponentCode::from_words(4, {{0, 0, 0}});
    CHECK_FALSE(one.min_hamming().has_value());

    CHECK(ComponentCode::named("repetition", 5, 3).min_hamming() == 3);
    CHECK_THROWS_AS(ComponentCode::named("mystery", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(ComponentCode::from_words(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("toy end-to-end assembly meets the design distance") {
    Field f = gf16();
    PartitionTree tree =
        build_alphabet_partition(toy_alphabet(), cyclic(f, 1), {cyclic(f, 3), cyclic(f, 0)});

    // freeze the level values so any drift is caught here
    CHECK(intrasubset_distance(tree, 0).value == intrasubset_distance_exhaustive(tree, 0));
    CHECK(intrasubset_distance(tree, 0).value == 2);
    CHECK(intrasubset_distance(tree, 1).value == intrasubset_distance_exhaustive(tree, 1));
    CHECK(intrasubset_distance(tree, 1).value == 2);
    CHECK(intrasubset_distance(tree, 1).fast_count == 10);
    CHECK(intrasubset_distance(tree, 1).naive_count == 210);
    CHECK(intrasubset_distance(tree, 2).value == intrasubset_distance_exhaustive(tree, 2));
    CHECK(intrasubset_distance(tree, 2).value == 2);
    CHECK(intrasubset_distance(tree, 2).fast_count == 8);
    CHECK(intrasubset_distance(tree, 2).naive_count == 60);

    // every level sits at distance 2, so reaching d = 4 takes the leaves
    const int d = 4;
    const std::vector<ComponentCode> comps{ComponentCode::repetition(2, 2),
                                           ComponentCode::repetition(3, 2),
                                           ComponentCode::repetition(5, 2)};
    ComponentValidation v = validate_component_codes(tree, comps, d);
    CHECK(v.l_prime == 3);
    CHECK(v.ok);

    MultishotCode code = assemble(tree, comps, d);
    CHECK(code.codewords().size() == 30);
    CHECK(code.length() == 2);
    CHECK(code.min_extended_distance() >= d);

    // undersized component distance fails validation and assembly
    const std::vector<ComponentCode> weak{ComponentCode::full(2, 2),
                                          ComponentCode::repetition(3, 2),
                                          ComponentCode::repetition(5, 2)};
    CHECK_FALSE(validate_component_codes(tree, weak, d).ok);
    CHECK_THROWS_AS(assemble(tree, weak, d), std::invalid_argument);

    // wrong component count or alphabet is rejected up front
    CHECK_THROWS_AS(validate_component_codes(tree, {ComponentCode::repetition(2, 2)}, d),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_component_codes(tree,
                                             {ComponentCode::repetition(2, 2),
                                              ComponentCode::repetition(4, 2),
                                              ComponentCode::repetition(5, 2)},
                                             d),
                    std::invalid_argument);
}

TEST_CASE("assembly over the punctured alphabet with subset representatives") {
    Field f = gf64();
    PartitionTree tree = build_alphabet_partition(
        punctured_alphabet(), cyclic(f, 1), {cyclic(f, 3), cyclic(f, 9), cyclic(f, 0)});

    // levels 0..2 sit at distance 2 and level 3 at 4, so d = 4 stops at
    // level 3, whose subsets still hold 7 subspaces each
    const int d = 4;
    const std::vector<ComponentCode> comps{ComponentCode::repetition(22, 2),
                                           ComponentCode::repetition(3, 2),
                                           ComponentCode::repetition(3, 2)};
    ComponentValidation v = validate_component_codes(tree, comps, d);
    CHECK(v.l_prime == 3);
    CHECK(v.ok);

    MultishotCode code = assemble(tree, comps, d);
    CHECK(code.codewords().size() == 22 * 3 * 3);
    CHECK(code.min_extended_distance() >= d);

    // coordinates are the deterministic representatives of level-3 subsets
    std::set<Subspace> reps;
    for (size_t n = 0; n < tree.level(3).size(); ++n)
        reps.insert(tree.representative(3, static_cast<int>(n)));
    for (const auto& word : code.codewords())
        for (const Subspace& coord : word) CHECK(reps.count(coord) == 1);
}

TEST_CASE("design distance met by the alphabet alone needs no components") {
    Field f = gf64();
    Subspace v = Subspace::from_field_elements(f, {0, 1, 4, 6, 16, 24, 33});
    OrbitCode oc = OrbitCode::generate(cyclic(f, 1), v);
    std::vector<Subspace> alphabet(oc.codewords().begin(), oc.codewords().end());
    PartitionTree tree = build_alphabet_partition(alphabet, cyclic(f, 1),
                                                  {cyclic(f, 9), cyclic(f, 0)});

    ComponentValidation v0 = validate_component_codes(tree, {}, 4);
    CHECK(v0.l_prime == 0);
    CHECK(v0.ok);

    MultishotCode code = assemble(tree, {}, 4);
    CHECK(code.length() == 1);
    CHECK(code.codewords().size() == 63);
    CHECK(code.min_extended_distance() == 4);
}

TEST_CASE("single-orbit alphabet with degenerate first level") {
    Field f = gf16();
    OrbitCode c1 = OrbitCode::generate(cyclic(f, 1), Subspace::from_field_elements(f, {0, 1, 4}));
    std::vector<Subspace> s(c1.codewords().begin(), c1.codewords().end());
    PartitionTree tree = build_alphabet_partition(s, cyclic(f, 1), {cyclic(f, 3), cyclic(f, 0)});
    CHECK(tree.child_count(1) == 1);
    CHECK(tree.level(2).size() == 3);
    CHECK(tree.level(3).size() == 15);
    CHECK(intrasubset_distance(tree, 1).value == intrasubset_distance_exhaustive(tree, 1));
}

TEST_SUITE_END();
