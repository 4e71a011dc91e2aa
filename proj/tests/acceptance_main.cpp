// Acceptance runner: executes the full verification matrix at its pinned
// scale and tolerances, single-threaded, and prints one line per criterion.
#include "qei/suite.hpp"

#include <cstdlib>
#include <iostream>

int main() {
    // wall-clock criterion is specified single-threaded
    setenv("QEL_THREADS", "1", 1);

    qei::SuiteConfig config;
    qei::SuiteResult result = qei::run_suite(config);

    for (const auto& c : result.criteria)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": "
                  << c.details << "\n";
    std::cout << (result.all_passed ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << result.total_seconds << " s)\n";
    return result.all_passed ? 0 : 1;
}
