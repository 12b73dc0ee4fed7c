#pragma once

// Wire formats shared by the CLI and the file interfaces: field
// descriptors, matrix literals, subspace JSON (coordinate rows or field
// exponents), generator specs, and JSON reports with stable key order.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orbitcodes/multishot.hpp"

namespace orbitcodes {

using Json = nlohmann::ordered_json;

// `scalar:9`, `semilinear:1,1`, `unipotent:<matrix literal>`, `gl:<matrix literal>`
GroupElement parse_generator_spec(std::string_view spec, const Field& field);
std::vector<GroupElement> parse_generator_list(std::string_view specs, const Field& field);

// {"n":..,"k":..,"q":..,"rows":[[..]]} or {"field":"gf(..)","exponents":[..]}
Subspace subspace_from_json(const Json& j, const Field& field);
Json subspace_to_json(const Subspace& s);

Json matrix_to_json(const MatrixFq& m);

Json orbit_code_report(const OrbitCode& code, bool include_codewords = true);
Json partition_report(const GuPartition& p);
Json tree_report(const PartitionTree& tree, bool include_members, int threads = 1);

}  // namespace orbitcodes
