#pragma once

// Run configuration for the command-line front end.
//
// Flat YAML (or JSON) mapping. Keys:
//   preset, model, d, delta_x, tau, witness, gamma, grid_min, grid_max,
//   points, log_spaced, particle_mass, ion_mass, trap_frequency, spin1,
//   spin2, out, format, exclusions
// A preset supplies every scan field; other keys override it. When delta_x is
// absent it is derived from ion_mass and trap_frequency.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ewit/scan.hpp"

namespace ewit::app {

enum class OutputFormat { csv, json };

std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
    std::optional<std::string> preset;
    scan::ScanRequest request;
    std::string out; ///< empty means stdout
    OutputFormat format = OutputFormat::csv;
    std::vector<std::string> exclusions;

    bool operator==(const RunConfig&) const = default;
};

std::vector<std::string> preset_names();

/// Throws Error(config) for unknown names.
RunConfig preset_config(std::string_view name);

/// Throws Error(config) naming the first unknown key.
RunConfig parse_run_config(std::string_view text);

/// Accepts a config file or a JSON result file (its "config" member).
RunConfig load_run_config(const std::filesystem::path& file);

/// YAML text that parse_run_config maps back to an equal RunConfig.
std::string dump_run_config(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);

} // namespace ewit::app
