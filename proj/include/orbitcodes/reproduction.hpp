#pragma once

// Built-in reference checks: the reproducible scenarios the library is
// validated against, each pinning exact parameters, counts and distances.
// Run by the acceptance test binary and the `reproduce-paper` subcommand.

#include <string>
#include <vector>

namespace orbitcodes {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_reference_checks();

}  // namespace orbitcodes
