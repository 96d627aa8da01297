// Acceptance gate: runs every criterion and prints one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <cstdio>

#include "augnewton/selftest.hpp"

int main() {
    const auto results = augnewton::run_acceptance_suite();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  criterion %d  %s: %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        if (!r.passed)
            ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
