#pragma once

#include <dpcolor/dpfunc.hpp>

#include <string>
#include <vector>

namespace dpcolor {

struct ClaimResult {
    std::string claim;
    bool passed = false;
    std::string detail;
};

/// Checks every closed form and inequality of the DP color function theory on
/// a built-in catalog of small instances by exhaustive enumeration.
std::vector<ClaimResult> run_theorem_suite(const DpOptions& opts = {});

} // namespace dpcolor
