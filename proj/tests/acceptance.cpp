// Acceptance gate: runs criteria AC1..AC9 and prints one line per criterion.
// Exit code 0 iff every criterion passes.

#include <cstdio>

#include "selftest.hpp"

int main() {
    const auto results =
        ledti::run_acceptance_suite([](const ledti::CriterionResult& r) {
            std::puts(ledti::format_criterion(r).c_str());
            std::fflush(stdout);
        });
    size_t passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    std::printf("%zu/%zu acceptance criteria passed\n", passed,
                results.size());
    return ledti::all_passed(results) ? 0 : 1;
}
