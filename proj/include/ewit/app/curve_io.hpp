#pragma once

// Serialization of constraint curves and classification reports.
//
// CSV layout: '#'-prefixed "key: value" metadata lines, then the header
//   abscissa,coupling,omega_ent_tau,valid,error_kind
// Numbers are written in locale-independent scientific notation with 17
// significant digits; samples without a coupling carry "nan".

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ewit/app/config.hpp"
#include "ewit/bounds.hpp"
#include "ewit/scan.hpp"

namespace ewit::app {

std::string format_number(double value);

void write_curve_csv(std::ostream& out, const scan::ConstraintCurve& curve);

nlohmann::json curve_to_json(const scan::ConstraintCurve& curve, const RunConfig& config,
                             const scan::RoundTripReport& round_trip);

/// Curve data as needed for classification.
struct CurveTable {
    scan::AbscissaKind abscissa = scan::AbscissaKind::range_m;
    scan::CouplingKind coupling = scan::CouplingKind::alpha_J_m;
    std::vector<bounds::CurvePoint> points;
};

CurveTable read_curve_csv(std::istream& in, const std::string& origin);
CurveTable read_curve_json(const nlohmann::json& doc);

/// Dispatches on content: JSON documents start with '{'.
CurveTable load_curve(const std::filesystem::path& file);

void write_classification_csv(std::ostream& out, std::span<const bounds::CurvePoint> points,
                              std::span<const bounds::Classification> classes);

} // namespace ewit::app
