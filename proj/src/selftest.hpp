#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ledti {

// One acceptance criterion's outcome. The suite is the project's exit gate;
// every tolerance and seed is pinned in selftest.cpp.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

using ProgressFn = std::function<void(const CriterionResult&)>;

// Runs criteria 1..9 in order; on_result (optional) fires as each one
// finishes so long runs report incrementally.
std::vector<CriterionResult> run_acceptance_suite(
    const ProgressFn& on_result = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

// `AC<k> <title>: PASS/FAIL (<detail>) [<seconds>s]`
std::string format_criterion(const CriterionResult& r);

}  // namespace ledti
