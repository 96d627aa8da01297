#pragma once

#include <string>
#include <vector>

namespace augnewton {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // measured values, or the first failure
};

/// Run the full acceptance suite: nine exact criteria covering the embedded
/// reference sequence, the closed-form fingerprint families, both
/// augmentation orbits, the torus-knot simplices, and the randomized
/// invariance/oracle suites. Deterministic (fixed seeds), no tolerances.
std::vector<CriterionResult> run_acceptance_suite();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace augnewton
