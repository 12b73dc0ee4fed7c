#include "orbitcodes/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitcodes {

GroupElement parse_generator_spec(std::string_view spec, const Field& field) {
    const size_t colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("generator spec needs the form kind:payload");
    const std::string kind(spec.substr(0, colon));
    const std::string payload(spec.substr(colon + 1));

    if (kind == "scalar") return GroupElement::field_scalar(field, std::stoll(payload));
    if (kind == "semilinear") {
        std::stringstream ss(payload);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw std::invalid_argument("semilinear spec needs exponent,frobenius");
        return GroupElement::semilinear(field, std::stoll(a), std::stoll(b));
    }
    if (kind == "unipotent")
        return GroupElement::unipotent(MatrixFq::parse(field->base_ptr(), payload));
    if (kind == "gl") return GroupElement::general_linear(MatrixFq::parse(field->base_ptr(), payload));
    throw std::invalid_argument("unknown generator kind '" + kind +
                                "' (expected scalar, semilinear, unipotent, gl)");
}

std::vector<GroupElement> parse_generator_list(std::string_view specs, const Field& field) {
    std::vector<GroupElement> out;
    std::stringstream ss{std::string(specs)};
    std::string tok;
    while (std::getline(ss, tok, '|'))
        if (!tok.empty()) out.push_back(parse_generator_spec(tok, field));
    if (out.empty()) throw std::invalid_argument("no generators given");
    return out;
}

Subspace subspace_from_json(const Json& j, const Field& field) {
    if (j.contains("exponents")) {
        Field f = field;
        if (j.contains("field")) f = FieldSpec::parse(j.at("field").get<std::string>());
        std::vector<long long> exps;
        for (const auto& e : j.at("exponents")) {
            if (e.is_string()) {
                if (e.get<std::string>() != "zero")
                    throw std::invalid_argument("exponent entries are integers or \"zero\"");
                continue;  // the zero element adds nothing to the span
            }
            const long long v = e.get<long long>();
            if (v < 0) continue;  // -1 also denotes the zero element
            exps.push_back(v);
        }
        return Subspace::from_field_elements(f, exps);
    }
    if (j.contains("rows")) {
        const int q = j.contains("q") ? j.at("q").get<int>() : field->base().order();
        if (q != field->base().order())
            throw std::invalid_argument("subspace field order does not match the context");
        std::vector<std::vector<int>> rows;
        for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<int>>());
        MatrixFq m = MatrixFq::from_rows(field->base_ptr(), rows);
        if (j.contains("n") && j.at("n").get<int>() != m.cols())
            throw std::invalid_argument("declared ambient dimension does not match the rows");
        Subspace s = Subspace::from_rows(m);
        if (j.contains("k") && j.at("k").get<int>() != s.dim())
            throw std::invalid_argument("declared dimension does not match the span");
        return s;
    }
    throw std::invalid_argument("subspace JSON needs \"rows\" or \"exponents\"");
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["n"] = s.ambient_dim();
    j["k"] = s.dim();
    j["q"] = s.field_ptr()->order();
    Json rows = Json::array();
    for (int i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
    j["rows"] = rows;
    return j;
}

Json matrix_to_json(const MatrixFq& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

Json orbit_code_report(const OrbitCode& code, bool include_codewords) {
    Json j;
    const auto p = code.size() >= 2 ? code.parameters()
                                    : OrbitCode::Parameters{code.ambient_dim(),
                                                            static_cast<long long>(code.size()), 0,
                                                            code.dimension()};
    j["parameters"] = {{"n", p.n}, {"M", p.m}, {"d", p.d}, {"k", p.k}};
    j["stabilizer_order"] = code.stabilizer().size();
    j["group_order"] = code.group().size();
    if (include_codewords) {
        Json words = Json::array();
        for (const Subspace& w : code.codewords()) words.push_back(subspace_to_json(w));
        j["codewords"] = words;
    }
    return j;
}

Json partition_report(const GuPartition& p) {
    Json j;
    j["code_size"] = p.code.size();
    j["subgroup_order"] = p.subgroup.size();
    j["subcode_count"] = p.subcodes.size();
    j["subcode_size"] = p.subcodes.front().size();
    j["fair"] = is_fair(p.subcodes);
    j["strongly_homogeneous"] = is_strongly_homogeneous(p);
    Json reps = Json::array();
    for (const Coset& c : p.subgroup_cosets) reps.push_back(c.representative.key());
    j["coset_representatives"] = reps;
    Json polys = Json::array();
    for (size_t i = 1; i < p.subgroup_cosets.size(); ++i)
        polys.push_back(
            polynomial_to_string(profile_polynomial(p, p.subgroup_cosets[i].representative, 0)));
    j["profile_polynomials"] = polys;
    return j;
}

Json tree_report(const PartitionTree& tree, bool include_members, int threads) {
    Json j;
    Json levels = Json::array();
    for (int l = 0; l <= tree.depth(); ++l) {
        Json lvl;
        lvl["level"] = l;
        lvl["subsets"] = tree.level(l).size();
        lvl["subset_size"] = tree.level(l).front().members.size();
        if (l >= 1) lvl["edge_labels"] = tree.child_count(l);
        const LevelDistanceReport rep = intrasubset_distance(tree, l, threads);
        if (rep.value)
            lvl["intrasubset_distance"] = *rep.value;
        else
            lvl["intrasubset_distance"] = "unbounded";
        lvl["computations_reduced"] = rep.fast_count;
        lvl["computations_naive"] = rep.naive_count;
        if (include_members) {
            Json nodes = Json::array();
            for (const TreeNode& n : tree.level(l)) {
                Json node;
                node["parent"] = n.parent;
                Json members = Json::array();
                for (const Subspace& m : n.members) members.push_back(subspace_to_json(m));
                node["members"] = members;
                nodes.push_back(node);
            }
            lvl["nodes"] = nodes;
        }
        levels.push_back(lvl);
    }
    j["levels"] = levels;
    return j;
}

}  // namespace orbitcodes
