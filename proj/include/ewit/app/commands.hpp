#pragma once

// Subcommands of the `ewit` tool. Each returns a process exit code.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ewit/app/config.hpp"
#include "ewit/app/validate.hpp"
#include "ewit/potentials.hpp"
#include "ewit/qcore.hpp"

namespace ewit::app {

enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 1,
    exit_computation_error = 2,
    exit_validation_failure = 3,
};

/// Round-trip tolerance a scan must meet before its output is written.
inline constexpr double kRoundTripTolerance = 1e-9;

/// Runs the scan, self-checks it and writes the curve to config.out (or
/// `out` when config.out is empty).
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Witness inputs: either explicit phases or a potential over a geometry.
struct WitnessInput {
    std::optional<qcore::PhaseSet> phases;
    std::optional<potentials::PotentialModel> model;
    potentials::Geometry geom;
    double gamma = 0.0;
    double tau = 1.0;
};

int cmd_witness(const WitnessInput& input, std::ostream& out, std::ostream& log);

/// Classifies a curve file (CSV or JSON) against exclusion files.
int cmd_classify(const std::string& curve_file, const std::vector<std::string>& exclusion_files,
                 const std::string& out_file, std::ostream& out, std::ostream& log);

int cmd_validate(std::ostream& out, const ValidationHooks& hooks = {});

} // namespace ewit::app
