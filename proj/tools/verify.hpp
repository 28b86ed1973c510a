#pragma once

#include <string>
#include <vector>

namespace diffset::cli {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant suite over the golden data: exhaustive tables for n <= 28,
/// closed forms, divots, structural identities, peaks, the fringe kernel
/// against its oracle and the m = 23 bound chain from the published counts.
/// Deterministic; the worker count only affects speed.
std::vector<CheckResult> run_verify_suite(unsigned workers);

}  // namespace diffset::cli
