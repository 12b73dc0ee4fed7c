#include "orbitcodes/reproduction.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "orbitcodes/abelian_unipotent.hpp"
#include "orbitcodes/multishot.hpp"

namespace orbitcodes {

namespace {

Field gf64() { return FieldSpec::make(2, 1, 6, {1, 1, 0, 0, 0, 0, 1}); }
Field gf16() { return FieldSpec::make(2, 1, 4, {1, 1, 0, 0, 1}); }

FiniteGroup cyclic(const Field& f, long long step) {
    return FiniteGroup::generate({GroupElement::field_scalar(f, step)});
}

MatrixFq random_matrix(const BaseFieldPtr& f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, f->order() - 1);
    MatrixFq m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

Subspace random_subspace(const BaseFieldPtr& f, int n, int k, std::mt19937& rng) {
    for (;;) {
        Subspace s = Subspace::from_rows(random_matrix(f, k, n, rng));
        if (s.dim() == k) return s;
    }
}

struct Failure {
    std::ostringstream out;
    int count = 0;
    template <typename T>
    void expect(bool ok, const T& message) {
        if (ok) return;
        if (count) out << "; ";
        out << message;
        ++count;
    }
};

using CheckFn = std::function<void(Failure&, std::string&)>;

CheckResult run_one(const std::string& name, const CheckFn& fn) {
    Failure f;
    std::string detail;
    try {
        fn(f, detail);
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
    if (f.count) return {name, false, f.out.str()};
    return {name, true, detail};
}

void check_cyclic_binary_63(Failure& f, std::string& detail) {
    Field field = gf64();
    Subspace v = Subspace::from_field_elements(field, {1, 8, 12, 26, 27, 32, 35});
    OrbitCode code = OrbitCode::generate(cyclic(field, 1), v);
    const auto p = code.parameters();
    f.expect(p.n == 6 && p.m == 63 && p.d == 4 && p.k == 3,
             "expected (6,63,4,3), got (" + std::to_string(p.n) + "," + std::to_string(p.m) + "," +
                 std::to_string(p.d) + "," + std::to_string(p.k) + ")");
    detail = "(6,63,4,3) cyclic code over GF(2^6)";
}

void check_unipotent_ternary_729(Failure& f, std::string& detail) {
    BaseFieldPtr f3 = BaseField::make(3);
    const std::vector<MatrixFq> gens{
        MatrixFq::parse(f3, "1,0,0;0,1,0;0,0,0"), MatrixFq::parse(f3, "0,0,0;0,1,0;0,0,1"),
        MatrixFq::parse(f3, "0,0,1;0,1,0;0,1,0"), MatrixFq::parse(f3, "0,0,2;2,0,0;0,1,0"),
        MatrixFq::parse(f3, "1,1,2;0,1,2;2,0,1"), MatrixFq::parse(f3, "0,0,0;0,0,1;2,1,1")};
    RankMetricCode rm = RankMetricCode::build(f3, 3, gens);
    f.expect(rm.size() == 729, "span size " + std::to_string(rm.size()) + " != 729");
    f.expect(rm.min_rank_distance() == 2,
             "rank distance " + std::to_string(rm.min_rank_distance()) + " != 2");

    BlockSubspaceLayout layout = BlockSubspaceLayout::from_matrix(
        MatrixFq::parse(f3, "1,0,0,1,2,0;0,1,0,1,0,0;0,0,1,0,2,1"));
    OrbitCode code = unipotent_orbit_code(layout, rm);
    const auto p = code.parameters();
    f.expect(p.n == 6 && p.m == 729 && p.d == 4 && p.k == 3,
             "expected (6,729,4,3), got (" + std::to_string(p.n) + "," + std::to_string(p.m) + "," +
                 std::to_string(p.d) + "," + std::to_string(p.k) + ")");
    f.expect(code.stabilizer().size() == 1, "stabilizer not trivial");
    detail = "(6,729,4,3) ternary code, |C|=729, d_R=2, trivial stabilizer";
}

void check_displacement_rank_equality(Failure& f, std::string& detail) {
    std::mt19937 rng(101);
    long long checked = 0;
    for (int q : {2, 3}) {
        BaseFieldPtr bf = BaseField::make(q);
        for (int r : {2, 3}) {
            long long total = 1;
            for (int i = 0; i < r * r; ++i) total *= q;
            const bool exhaustive = total <= 729;
            for (const MatrixFq& a :
                 {MatrixFq(bf, r, r), random_matrix(bf, r, r, rng), random_matrix(bf, r, r, rng)}) {
                BlockSubspaceLayout layout =
                    BlockSubspaceLayout::from_matrix(MatrixFq::hstack(MatrixFq::identity(bf, r), a));
                Subspace v = layout.subspace();
                const long long trials = exhaustive ? total : 500;
                for (long long t = 0; t < trials; ++t) {
                    MatrixFq h(bf, r, r);
                    if (exhaustive) {
                        long long x = t;
                        for (int i = 0; i < r; ++i)
                            for (int j = 0; j < r; ++j) {
                                h.set(i, j, static_cast<int>(x % q));
                                x /= q;
                            }
                    } else {
                        h = random_matrix(bf, r, r, rng);
                    }
                    const int dist = subspace_distance(v, act(GroupElement::unipotent(h), v));
                    f.expect(dist == exact_distance_identity_layout(h),
                             "q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                 ": distance != 2*rank(H)");
                    ++checked;
                    if (f.count > 3) return;
                }
            }
        }
    }
    detail = std::to_string(checked) + " displacements, distance = 2*rank(H) throughout";
}

void check_displacement_rank_bound(Failure& f, std::string& detail) {
    std::mt19937 rng(202);
    long long checked = 0;
    for (int q : {2, 3}) {
        BaseFieldPtr bf = BaseField::make(q);
        int done = 0;
        while (done < 200) {
            MatrixFq m = random_matrix(bf, 3, 6, rng);
            if (m.rank() != 3) continue;
            std::uniform_int_distribution<int> split(0, 3);
            BlockSubspaceLayout layout = BlockSubspaceLayout::from_matrix(m, split(rng));
            MatrixFq h = random_matrix(bf, 3, 3, rng);
            Subspace v = layout.subspace();
            const int dist = subspace_distance(v, act(GroupElement::unipotent(h), v));
            f.expect(dist <= distance_bound(layout, h),
                     "q=" + std::to_string(q) + ": distance exceeds 2*rank([AH;CH])");
            ++done;
            ++checked;
            if (f.count > 3) return;
        }
    }
    detail = std::to_string(checked) + " random layouts within the rank bound";
}

void check_spread_codes(Failure& f, std::string& detail) {
    OrbitCode s63 = spread_code(gf64(), 3);
    f.expect(s63.size() == 9, "spread in GF(2^6) has " + std::to_string(s63.size()) + " codewords");
    for (size_t i = 0; i < s63.size(); ++i)
        for (size_t j = i + 1; j < s63.size(); ++j)
            f.expect(subspace_distance(s63.codewords()[i], s63.codewords()[j]) == 6,
                     "spread pair distance != 6");

    OrbitCode s42 = spread_code(gf16(), 2);
    f.expect(s42.size() == 5, "spread in GF(2^4) has " + std::to_string(s42.size()) + " codewords");
    for (size_t i = 0; i < s42.size(); ++i)
        for (size_t j = i + 1; j < s42.size(); ++j)
            f.expect(subspace_distance(s42.codewords()[i], s42.codewords()[j]) == 4,
                     "spread pair distance != 4");
    detail = "(6,9,6,3) and (4,5,4,2) spread codes, all pairwise distances checked";
}

void check_translate_interdistance_polynomial(Failure& f, std::string& detail) {
    Field field = gf64();
    Subspace v = Subspace::from_field_elements(field, {0, 8, 10, 20, 48, 59, 61});
    OrbitCode code = OrbitCode::generate(cyclic(field, 3), v);
    GuPartition p = partition_by_subgroup(code, cyclic(field, 9));

    const DistanceMultiset expected{{2, 7}, {4, 14}, {6, 28}};
    f.expect(interdistance(p.subcodes[0], p.subcodes[1]) == expected,
             "first translate multiset != {2:7,4:14,6:28}");
    f.expect(interdistance(p.subcodes[0], p.subcodes[2]) == expected,
             "second translate multiset != {2:7,4:14,6:28}");

    // inverse-coset symmetry across every coset pair of the full partition
    OrbitCode full = OrbitCode::generate(cyclic(field, 1), v);
    GuPartition pf = partition_by_subgroup(full, cyclic(field, 9));
    for (size_t i = 0; i < pf.subgroup_cosets.size(); ++i) {
        const GroupElement& rep = pf.subgroup_cosets[i].representative;
        f.expect(profile_polynomial(pf, rep, 0) == profile_polynomial(pf, rep.inverse(), 0),
                 "profile polynomial differs from its inverse coset");
    }
    detail = "translate interdistances 7w^2 + 14w^4 + 28w^6; inverse symmetry on all cosets";
}

void check_reduced_mindist_oracle(Failure& f, std::string& detail) {
    long long cases = 0;
    {
        Field field = gf16();
        std::vector<FiniteGroup> subgroups;
        for (long long step : {0, 5, 3, 1}) subgroups.push_back(cyclic(field, step));
        for (const Subspace& v : enumerate_grassmannian(field->base_ptr(), 4, 2)) {
            OrbitCode code = OrbitCode::generate(cyclic(field, 1), v);
            if (code.size() < 2) continue;
            const int oracle = min_distance_exhaustive(code.codewords());
            for (const FiniteGroup& h : subgroups) {
                f.expect(fast_min_distance(code, h).min_distance == oracle,
                         "mismatch on G_2(4,2) point with |H|=" + std::to_string(h.size()));
                ++cases;
            }
        }
    }
    {
        Field field = gf64();
        std::mt19937 rng(303);
        std::vector<FiniteGroup> subgroups;
        for (long long step : {0, 21, 9, 7, 3, 1}) subgroups.push_back(cyclic(field, step));
        for (int i = 0; i < 20; ++i) {
            Subspace v = random_subspace(field->base_ptr(), 6, 3, rng);
            OrbitCode code = OrbitCode::generate(cyclic(field, 1), v);
            if (code.size() < 2) continue;
            const int oracle = min_distance_exhaustive(code.codewords());
            for (const FiniteGroup& h : subgroups) {
                f.expect(fast_min_distance(code, h).min_distance == oracle,
                         "mismatch on random G_2(6,3) point with |H|=" + std::to_string(h.size()));
                ++cases;
            }
        }
    }
    detail = std::to_string(cases) + " (code, subgroup) pairs match the exhaustive oracle";
}

void check_reduced_mindist_28(Failure& f, std::string& detail) {
    Field field = gf64();
    Subspace v = Subspace::from_field_elements(field, {0, 1, 4, 6, 16, 24, 33});
    OrbitCode code = OrbitCode::generate(cyclic(field, 1), v);
    FastMinDistance fast = fast_min_distance(code, cyclic(field, 9));
    f.expect(fast.computations == 28,
             "evaluated " + std::to_string(fast.computations) + " distances, expected 28");
    f.expect(fast.min_distance == 4, "minimum distance != 4");
    f.expect(predicted_fast_count(9, 7, 2) == 28, "count formula != 28");

    GuPartition p = partition_by_subgroup(code, cyclic(field, 9));
    for (size_t i = 1; i <= 4; ++i) {
        DistanceMultiset row;
        for (const Subspace& w : p.subcodes[i]) ++row[subspace_distance(v, w)];
        long long total = 0;
        int row_min = -1;
        for (const auto& [d, c] : row) {
            f.expect(d == 4 || d == 6, "translate row contains a distance other than 4 or 6");
            if (row_min < 0) row_min = d;
            total += c;
        }
        f.expect(total == 7, "translate row does not hold 7 distances");
        f.expect(row_min == 4, "translate row minimum != 4");
    }
    detail = "28 evaluations, minimum 4; four translate rows of 4s and 6s";
}

void check_alphabet_partition_counts(Failure& f, std::string& detail) {
    Field field = gf64();
    std::vector<Subspace> all = enumerate_grassmannian(field->base_ptr(), 6, 3);
    const OrbitCode spread_orbit = spread_code(field, 3);
    std::set<Subspace> spread(spread_orbit.codewords().begin(), spread_orbit.codewords().end());
    std::vector<Subspace> s;
    for (Subspace& x : all)
        if (!spread.count(x)) s.push_back(std::move(x));
    f.expect(s.size() == 1386, "punctured alphabet size != 1386");

    std::vector<std::vector<Subspace>> orbits = group_orbits(s, cyclic(field, 1));
    f.expect(orbits.size() == 22, "expected 22 cyclic orbits");
    for (const auto& o : orbits)
        f.expect(o.size() == 63, "cyclic orbit of size " + std::to_string(o.size()));

    FiniteGroup semi = FiniteGroup::generate(
        {GroupElement::field_scalar(field, 1), GroupElement::semilinear(field, 0, 1)});
    std::multiset<size_t> sizes;
    for (const auto& o : group_orbits(s, semi)) sizes.insert(o.size());
    f.expect(sizes == std::multiset<size_t>{126, 126, 189, 189, 378, 378},
             "semilinear orbit sizes differ from {378,378,126,126,189,189}");

    PartitionTree tree = build_alphabet_partition(
        s, cyclic(field, 1), {cyclic(field, 3), cyclic(field, 9), cyclic(field, 0)});
    const LevelDistanceReport g1 = intrasubset_distance(tree, 1);
    const LevelDistanceReport g2 = intrasubset_distance(tree, 2);
    const LevelDistanceReport g3 = intrasubset_distance(tree, 3);
    f.expect(g1.fast_count == 616 && g1.naive_count == 42966,
             "level 1 counts " + std::to_string(g1.fast_count) + "/" +
                 std::to_string(g1.naive_count) + " != 616/42966");
    f.expect(g2.fast_count == 154 && g2.naive_count == 13860,
             "level 2 counts " + std::to_string(g2.fast_count) + "/" +
                 std::to_string(g2.naive_count) + " != 154/13860");
    f.expect(g3.fast_count == 132 && g3.naive_count == 4158,
             "level 3 counts " + std::to_string(g3.fast_count) + "/" +
                 std::to_string(g3.naive_count) + " != 132/4158");
    detail = "1386 = 22x63; semilinear sizes 378/126/189; counts 616/42966, 154/13860, 132/4158";
}

void check_grassmannian_counts(Failure& f, std::string& detail) {
    BaseFieldPtr f2 = BaseField::make(2);
    f.expect(enumerate_grassmannian(f2, 4, 2).size() == 35, "G_2(4,2) enumeration != 35");
    f.expect(gaussian_binomial(4, 2, 2) == 35, "counting formula for (4,2,2) != 35");
    f.expect(enumerate_grassmannian(f2, 6, 3).size() == 1395, "G_2(6,3) enumeration != 1395");
    f.expect(gaussian_binomial(6, 3, 2) == 1395, "counting formula for (6,3,2) != 1395");
    detail = "35 and 1395 subspaces, enumeration equals the counting formula";
}

void check_voronoi_symmetry(Failure& f, std::string& detail) {
    Field field = gf16();
    Subspace v1 = Subspace::from_field_elements(field, {0, 1, 4});
    OrbitCode code = OrbitCode::generate(cyclic(field, 1), v1);
    std::vector<Subspace> ambient = enumerate_grassmannian(field->base_ptr(), 4, 2);

    GroupElement u = GroupElement::field_scalar(field, 11);
    std::vector<Subspace> image;
    for (const Subspace& x : voronoi_region(code, ambient, v1)) image.push_back(act(u, x));
    std::sort(image.begin(), image.end());
    std::vector<Subspace> target = voronoi_region(code, ambient, act(u, v1));
    std::sort(target.begin(), target.end());
    f.expect(image == target, "region image differs from the translated region");
    detail = "region of size " + std::to_string(image.size()) +
             " maps onto the translated codeword's region";
}

void check_multishot_assembly(Failure& f, std::string& detail) {
    Field f16 = gf16();
    OrbitCode c1 = OrbitCode::generate(cyclic(f16, 1), Subspace::from_field_elements(f16, {0, 1, 4}));
    OrbitCode c2 = OrbitCode::generate(cyclic(f16, 1), Subspace::from_field_elements(f16, {0, 2, 8}));
    std::vector<Subspace> toy(c1.codewords().begin(), c1.codewords().end());
    toy.insert(toy.end(), c2.codewords().begin(), c2.codewords().end());
    PartitionTree tree =
        build_alphabet_partition(toy, cyclic(f16, 1), {cyclic(f16, 3), cyclic(f16, 0)});

    struct Config {
        int d;
        std::vector<ComponentCode> comps;
    };
    std::vector<Config> configs;
    configs.push_back({4,
                       {ComponentCode::repetition(2, 2), ComponentCode::repetition(3, 2),
                        ComponentCode::repetition(5, 2)}});
    configs.push_back({6,
                       {ComponentCode::repetition(2, 3), ComponentCode::repetition(3, 3),
                        ComponentCode::repetition(5, 3)}});
    int idx = 0;
    for (const Config& cfg : configs) {
        ComponentValidation v = validate_component_codes(tree, cfg.comps, cfg.d);
        f.expect(v.ok, "configuration " + std::to_string(idx) + " fails validation");
        MultishotCode code = assemble(tree, cfg.comps, cfg.d);
        f.expect(code.min_extended_distance() >= cfg.d,
                 "configuration " + std::to_string(idx) + " misses the design distance");
        ++idx;
    }

    // single-orbit alphabet whose leaves reach distance 6 only at the end
    Field f64f = gf64();
    Subspace v7 = Subspace::from_field_elements(f64f, {0, 1, 4, 6, 16, 24, 33});
    OrbitCode oc = OrbitCode::generate(cyclic(f64f, 1), v7);
    std::vector<Subspace> alphabet(oc.codewords().begin(), oc.codewords().end());
    PartitionTree deep = build_alphabet_partition(alphabet, cyclic(f64f, 1),
                                                  {cyclic(f64f, 9), cyclic(f64f, 0)});
    const std::vector<ComponentCode> comps{ComponentCode::repetition(1, 2),
                                           ComponentCode::repetition(9, 2),
                                           ComponentCode::repetition(7, 2)};
    ComponentValidation v = validate_component_codes(deep, comps, 6);
    f.expect(v.ok, "deep configuration fails validation");
    MultishotCode code = assemble(deep, comps, 6);
    f.expect(code.min_extended_distance() >= 6, "deep configuration misses the design distance");
    detail = "3 validated configurations, exhaustive extended minimum meets the design distance";
}

}  // namespace

std::vector<CheckResult> run_reference_checks() {
    const std::vector<std::pair<std::string, CheckFn>> checks{
        {"cyclic-binary-63", check_cyclic_binary_63},
        {"unipotent-ternary-729", check_unipotent_ternary_729},
        {"displacement-rank-equality", check_displacement_rank_equality},
        {"displacement-rank-bound", check_displacement_rank_bound},
        {"spread-codes", check_spread_codes},
        {"translate-interdistance-polynomial", check_translate_interdistance_polynomial},
        {"reduced-mindist-oracle", check_reduced_mindist_oracle},
        {"reduced-mindist-28-evaluations", check_reduced_mindist_28},
        {"alphabet-partition-counts", check_alphabet_partition_counts},
        {"grassmannian-counts", check_grassmannian_counts},
        {"voronoi-symmetry", check_voronoi_symmetry},
        {"multishot-assembly", check_multishot_assembly},
    };
    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& [name, fn] : checks) results.push_back(run_one(name, fn));
    return results;
}

}  // namespace orbitcodes
