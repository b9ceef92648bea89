#pragma once

// Property suite behind `ewit validate`: every module invariant checked at its
// documented tolerance on fixed-seed random samples.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ewit::app {

/// Substitutable entry points, so mutation tests can prove the suite bites.
struct ValidationHooks {
    /// (omega_ent, gamma, tau) -> closed-form witness
    std::function<double(double, double, double)> witness;

    ValidationHooks();
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<PropertyResult> run_validation(const ValidationHooks& hooks = {});

/// Pass/fail table; returns true iff every property passed.
bool print_validation(std::ostream& out, const std::vector<PropertyResult>& results);

} // namespace ewit::app
