// Command-line front end: constructs and analyzes orbit codes, unipotent
// Abelian codes, geometrically uniform partitions and multishot codes,
// emitting deterministic JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitcodes/abelian_unipotent.hpp"
#include "orbitcodes/formats.hpp"
#include "orbitcodes/reproduction.hpp"

using namespace orbitcodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;

// ORBITCODES_VERBOSE=1 enables progress notes on stderr.
bool verbose() {
    static const bool on = [] {
        const char* v = std::getenv("ORBITCODES_VERBOSE");
        return v != nullptr && *v != '\0' && std::string_view(v) != "0";
    }();
    return on;
}

void note(const std::string& message) {
    if (verbose()) std::cerr << "[orbitcodes] " << message << "\n";
}

void emit(const Json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file " + output_path);
    out << j.dump(2) << "\n";
}

// Accepts inline JSON, an exps:1,2,3 shorthand, or a matrix literal.
Subspace parse_subspace_arg(const std::string& arg, const Field& field) {
    if (!arg.empty() && arg.front() == '{') return subspace_from_json(Json::parse(arg), field);
    if (arg.rfind("exps:", 0) == 0) {
        std::vector<long long> exps;
        std::stringstream ss(arg.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) exps.push_back(std::stoll(tok));
        return Subspace::from_field_elements(field, exps);
    }
    return Subspace::from_rows(MatrixFq::parse(field->base_ptr(), arg));
}

FiniteGroup scalar_subgroup_of_order(const Field& field, long long order) {
    const long long full = field->multiplicative_order();
    if (order < 1 || full % order != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(order) +
                                    " does not divide " + std::to_string(full));
    return FiniteGroup::generate({GroupElement::field_scalar(field, full / order)});
}

std::vector<Subspace> load_alphabet(const std::string& spec, const Field& field, int k) {
    if (spec == "grassmannian")
        return enumerate_grassmannian(field->base_ptr(), field->extension_degree(), k);
    if (spec == "grassmannian-minus-spread") {
        std::vector<Subspace> all =
            enumerate_grassmannian(field->base_ptr(), field->extension_degree(), k);
        const OrbitCode spread_orbit = spread_code(field, k);
        std::set<Subspace> spread(spread_orbit.codewords().begin(),
                                  spread_orbit.codewords().end());
        std::vector<Subspace> out;
        for (Subspace& s : all)
            if (!spread.count(s)) out.push_back(std::move(s));
        return out;
    }
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open alphabet file " + spec.substr(1));
        Json j = Json::parse(in);
        std::vector<Subspace> out;
        for (const auto& entry : j) out.push_back(subspace_from_json(entry, field));
        return out;
    }
    throw std::invalid_argument(
        "alphabet must be grassmannian, grassmannian-minus-spread, or @file.json");
}

int dispatch(int argc, char** argv) {
    CLI::App app{"orbit-code constructions and analysis over small finite fields"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("-o,--output", output_path, "write the JSON report to a file");

    std::string field_desc, group_spec = "scalar:1", subspace_arg, mode = "literal";
    std::string alphabet_spec, series_spec, components_spec, generators_file, initial_literal;
    std::string distances_csv;
    long long subgroup_order = 1, codeword_exp = 0;
    int q = 0, n = 0, k = 0, r = 0, rank_dist = 0, shots = 1, design = 0, threads = 1;
    bool list_members = false;

    CLI::App* cmd_field = app.add_subcommand("field", "validate a field descriptor");
    cmd_field->add_option("--field", field_desc, "gf(p,t,n,[c0,...,cn])")->required();

    CLI::App* cmd_grass = app.add_subcommand("grassmannian", "count or list G_q(n,k)");
    cmd_grass->add_option("--q", q, "base field order (prime in {2,3,5,7})")->required();
    cmd_grass->add_option("--n", n, "ambient dimension")->required();
    cmd_grass->add_option("--k", k, "subspace dimension")->required();
    cmd_grass->add_flag("--list", list_members, "include the subspaces");

    CLI::App* cmd_orbit = app.add_subcommand("orbit", "orbit code of a subspace under a group");
    cmd_orbit->add_option("--field", field_desc)->required();
    cmd_orbit->add_option("--group", group_spec, "generators, e.g. scalar:1|semilinear:0,1");
    cmd_orbit->add_option("--subspace", subspace_arg, "JSON, exps:..., or matrix literal")
        ->required();

    CLI::App* cmd_spread = app.add_subcommand("spread", "orbit of the subfield F_{q^r}");
    cmd_spread->add_option("--field", field_desc)->required();
    cmd_spread->add_option("--r", r, "subfield degree, r | n")->required();

    CLI::App* cmd_abel = app.add_subcommand("abelian-construct",
                                            "unipotent orbit code from a rank-metric code");
    cmd_abel->add_option("--q", q, "base field order")->required();
    cmd_abel->add_option("--r", r, "displacement block size (n = 2r)")->required();
    cmd_abel->add_option("--rank-distance", rank_dist, "target minimum rank distance");
    cmd_abel->add_option("--generators", generators_file, "JSON file with generator matrices");
    cmd_abel->add_option("--initial", initial_literal, "k x 2r matrix literal; defaults to [I 0]");

    CLI::App* cmd_part = app.add_subcommand("partition", "coset partition of a cyclic orbit code");
    cmd_part->add_option("--field", field_desc)->required();
    cmd_part->add_option("--subspace", subspace_arg)->required();
    cmd_part->add_option("--group", group_spec, "generators of the parent group");
    cmd_part->add_option("--subgroup-order", subgroup_order, "order of the scalar subgroup")
        ->required();

    CLI::App* cmd_fast = app.add_subcommand("fast-mindist", "reduced minimum distance computation");
    cmd_fast->add_option("--field", field_desc)->required();
    cmd_fast->add_option("--subspace", subspace_arg)->required();
    cmd_fast->add_option("--subgroup-order", subgroup_order)->required();
    cmd_fast->add_option("--distances-csv", distances_csv,
                         "also write the per-coset distance table as CSV");

    CLI::App* cmd_vor = app.add_subcommand("voronoi", "voronoi region of a codeword");
    cmd_vor->add_option("--field", field_desc)->required();
    cmd_vor->add_option("--subspace", subspace_arg, "base point of the cyclic orbit code")
        ->required();
    cmd_vor->add_option("--codeword-exp", codeword_exp, "region of a^i * V (default i = 0)");
    cmd_vor->add_option("--mode", mode)->check(CLI::IsMember({"literal", "exclude-self"}));

    CLI::App* cmd_multi = app.add_subcommand("multishot", "multi-level multishot construction");
    cmd_multi->add_option("--field", field_desc)->required();
    cmd_multi->add_option("--k", k, "codeword dimension")->required();
    cmd_multi->add_option("--alphabet", alphabet_spec,
                          "grassmannian | grassmannian-minus-spread | @file.json")
        ->required();
    cmd_multi->add_option("--group", group_spec, "generators of the level-1 group");
    cmd_multi->add_option("--series", series_spec,
                          "orders of the nested scalar subgroups, e.g. 21,7,1")
        ->required();
    cmd_multi->add_option("--m", shots, "number of channel uses");
    cmd_multi->add_option("--distance", design, "design distance");
    cmd_multi->add_option("--components", components_spec,
                          "per-level component codes, e.g. repetition,repetition,repetition");
    cmd_multi->add_flag("--list", list_members, "include subset members in the tree report");
    cmd_multi->add_option("--threads", threads, "worker threads for the root-level distance scan");

    CLI::App* cmd_repro =
        app.add_subcommand("reproduce-paper", "run every built-in reference check");

    // let --output appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints help text or the parse error
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (cmd_field->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        Json j;
        j["descriptor"] = f->descriptor();
        j["q"] = f->base().order();
        j["n"] = f->extension_degree();
        j["cardinality"] = f->cardinality();
        j["multiplicative_order"] = f->multiplicative_order();
        j["primitive"] = true;  // construction verifies primitivity
        emit(j, output_path);
        return kExitOk;
    }

    if (cmd_grass->parsed()) {
        BaseFieldPtr f = BaseField::make(q);
        Json j;
        j["q"] = q;
        j["n"] = n;
        j["k"] = k;
        j["count"] = gaussian_binomial(n, k, q);
        if (list_members) {
            Json arr = Json::array();
            for (const Subspace& s : enumerate_grassmannian(f, n, k))
                arr.push_back(subspace_to_json(s));
            j["subspaces"] = arr;
        }
        emit(j, output_path);
        return kExitOk;
    }

    if (cmd_orbit->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        FiniteGroup g = FiniteGroup::generate(parse_generator_list(group_spec, f));
        note("group enumerated: " + std::to_string(g.size()) + " elements");
        OrbitCode code = OrbitCode::generate(g, parse_subspace_arg(subspace_arg, f));
        note("orbit generated: " + std::to_string(code.size()) + " codewords");
        emit(orbit_code_report(code), output_path);
        return kExitOk;
    }

    if (cmd_spread->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        emit(orbit_code_report(spread_code(f, r)), output_path);
        return kExitOk;
    }

    if (cmd_abel->parsed()) {
        BaseFieldPtr f = BaseField::make(q);
        std::vector<MatrixFq> gens;
        std::string provenance;
        if (!generators_file.empty()) {
            std::ifstream in(generators_file);
            if (!in) throw std::invalid_argument("cannot open " + generators_file);
            Json j = Json::parse(in);
            for (const auto& mat : j) {
                std::vector<std::vector<int>> rows;
                for (const auto& row : mat) rows.push_back(row.get<std::vector<int>>());
                gens.push_back(MatrixFq::from_rows(f, rows));
            }
            provenance = "file:" + generators_file;
        } else {
            if (rank_dist < 1)
                throw std::invalid_argument("--rank-distance or --generators is required");
            gens = gabidulin_generators(f, r, rank_dist);
            provenance = "mrd(q=" + std::to_string(q) + ",r=" + std::to_string(r) +
                         ",d=" + std::to_string(rank_dist) + ")";
        }
        RankMetricCode rm = RankMetricCode::build(f, r, gens);
        MatrixFq initial = initial_literal.empty()
                               ? MatrixFq::hstack(MatrixFq::identity(f, r), MatrixFq(f, r, r))
                               : MatrixFq::parse(f, initial_literal);
        OrbitCode code = unipotent_orbit_code(BlockSubspaceLayout::from_matrix(initial), rm);
        Json j = orbit_code_report(code, /*include_codewords=*/false);
        j["rank_metric"] = {{"generators", gens.size()},
                            {"cardinality", rm.size()},
                            {"rank_distance", rm.min_rank_distance()},
                            {"provenance", provenance}};
        emit(j, output_path);
        return kExitOk;
    }

    if (cmd_part->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        FiniteGroup g = FiniteGroup::generate(parse_generator_list(group_spec, f));
        OrbitCode code = OrbitCode::generate(g, parse_subspace_arg(subspace_arg, f));
        GuPartition p = partition_by_subgroup(code, scalar_subgroup_of_order(f, subgroup_order));
        emit(partition_report(p), output_path);
        return kExitOk;
    }

    if (cmd_fast->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        FiniteGroup g = FiniteGroup::generate({GroupElement::field_scalar(f, 1)});
        OrbitCode code = OrbitCode::generate(g, parse_subspace_arg(subspace_arg, f));
        FiniteGroup h = scalar_subgroup_of_order(f, subgroup_order);
        FastMinDistance fast = fast_min_distance(code, h);
        Json j;
        j["min_distance"] = fast.min_distance;
        j["computations_fast"] = fast.computations;
        j["computations_intra"] = fast.intra_computations;
        j["computations_naive"] =
            static_cast<long long>(code.size()) * (static_cast<long long>(code.size()) - 1) / 2;
        j["used_fallback"] = fast.used_fallback;
        if (fast.used_fallback)
            std::cerr << "note: reduction unavailable, base-point scan used\n";
        if (!distances_csv.empty()) {
            std::ofstream csv(distances_csv, std::ios::trunc);
            if (!csv) throw std::invalid_argument("cannot open " + distances_csv);
            csv << "coset_representative,distances_from_base_point\n";
            GuPartition p = partition_by_subgroup(code, h);
            for (size_t i = 1; i < p.subcodes.size(); ++i) {
                csv << p.subgroup_cosets[i].representative.key();
                for (const Subspace& w : p.subcodes[i])
                    csv << "," << subspace_distance(code.base_point(), w);
                csv << "\n";
            }
        }
        emit(j, output_path);
        return kExitOk;
    }

    if (cmd_vor->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        FiniteGroup g = FiniteGroup::generate({GroupElement::field_scalar(f, 1)});
        OrbitCode code = OrbitCode::generate(g, parse_subspace_arg(subspace_arg, f));
        Subspace c = act(GroupElement::field_scalar(f, codeword_exp), code.base_point());
        std::vector<Subspace> ambient = enumerate_grassmannian(
            f->base_ptr(), f->extension_degree(), code.dimension());
        const VoronoiMode vm =
            mode == "literal" ? VoronoiMode::literal : VoronoiMode::exclude_self;
        std::vector<Subspace> region = voronoi_region(code, ambient, c, vm);
        Json j;
        j["mode"] = mode;
        j["codeword"] = subspace_to_json(c);
        j["region_size"] = region.size();
        Json arr = Json::array();
        for (const Subspace& s : region) arr.push_back(subspace_to_json(s));
        j["region"] = arr;
        emit(j, output_path);
        return kExitOk;
    }

    if (cmd_multi->parsed()) {
        Field f = FieldSpec::parse(field_desc);
        FiniteGroup g = FiniteGroup::generate(parse_generator_list(group_spec, f));
        std::vector<FiniteGroup> series;
        {
            std::stringstream ss(series_spec);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) series.push_back(scalar_subgroup_of_order(f, std::stoll(tok)));
        }
        std::vector<Subspace> alphabet = load_alphabet(alphabet_spec, f, k);
        note("alphabet loaded: " + std::to_string(alphabet.size()) + " subspaces");
        PartitionTree tree = build_alphabet_partition(std::move(alphabet), g, series);
        note("partition tree built: depth " + std::to_string(tree.depth()));
        Json j = tree_report(tree, list_members, threads);

        if (design > 0) {
            std::vector<ComponentCode> comps;
            if (!components_spec.empty()) {
                std::stringstream ss(components_spec);
                std::string tok;
                int level = 1;
                while (std::getline(ss, tok, ',')) {
                    comps.push_back(ComponentCode::named(tok, tree.child_count(level), shots));
                    ++level;
                }
            }
            ComponentValidation v = validate_component_codes(tree, comps, design);
            Json vj;
            vj["design_distance"] = design;
            vj["coded_levels"] = v.l_prime;
            vj["satisfied"] = v.ok;
            vj["levels"] = v.level_reports;
            j["validation"] = vj;
            if (v.ok) {
                MultishotCode code = assemble(tree, comps, design);
                Json cj;
                cj["m"] = code.length();
                cj["size"] = code.codewords().size();
                cj["min_extended_distance"] = code.min_extended_distance();
                j["code"] = cj;
            }
        }
        emit(j, output_path);
        return design > 0 && !j["validation"]["satisfied"].get<bool>() ? kExitVerification
                                                                       : kExitOk;
    }

    if (cmd_repro->parsed()) {
        int failures = 0;
        Json table = Json::array();
        for (const CheckResult& r2 : run_reference_checks()) {
            Json row;
            row["check"] = r2.name;
            row["status"] = r2.passed ? "pass" : "fail";
            row["detail"] = r2.detail;
            table.push_back(row);
            std::cerr << (r2.passed ? "PASS " : "FAIL ") << r2.name << ": " << r2.detail << "\n";
            if (!r2.passed) ++failures;
        }
        Json j;
        j["checks"] = table;
        j["passed"] = table.size() - failures;
        j["failed"] = failures;
        emit(j, output_path);
        return failures ? kExitVerification : kExitOk;
    }

    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
