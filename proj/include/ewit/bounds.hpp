#pragma once

// Externally published exclusion limits and comparison of curves against them.
//
// File format: UTF-8 text. Lines starting with '#' carry "key: value"
// metadata (name, source, abscissa, coupling; other keys are kept verbatim).
// Every other non-blank line holds two numbers separated by whitespace or a
// comma: abscissa and the upper limit on the coupling.

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ewit/scan.hpp"

namespace ewit::bounds {

using scan::AbscissaKind;
using scan::CouplingKind;

class ExclusionRegion {
public:
    ExclusionRegion(std::string name, std::string source, AbscissaKind abscissa, CouplingKind coupling,
                    std::vector<std::pair<double, double>> samples,
                    std::map<std::string, std::string> metadata = {});

    const std::string& name() const noexcept { return name_; }
    const std::string& source() const noexcept { return source_; }
    AbscissaKind abscissa_kind() const noexcept { return abscissa_; }
    CouplingKind coupling_kind() const noexcept { return coupling_; }
    const std::vector<std::pair<double, double>>& samples() const noexcept { return samples_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

    bool supports(double abscissa) const noexcept;

    /// Log-log interpolated upper limit; nullopt outside the sampled support.
    std::optional<double> limit_at(double abscissa) const;

private:
    std::string name_;
    std::string source_;
    AbscissaKind abscissa_;
    CouplingKind coupling_;
    std::vector<std::pair<double, double>> samples_;
    std::map<std::string, std::string> metadata_;
};

/// Parse errors carry `origin:line:`.
ExclusionRegion parse_exclusion(std::istream& in, const std::string& origin);
ExclusionRegion load_exclusion(const std::filesystem::path& file);

enum class Classification { excluded, allowed, outside_region_support, no_coupling };

std::string_view to_string(Classification c) noexcept;

/// Minimal view of a curve for classification.
struct CurvePoint {
    double abscissa = 0.0;
    double coupling = 0.0; ///< NaN for samples without a coupling
};

/// A point is excluded iff |coupling| >= the interpolated limit (closed
/// boundary). Samples with no finite coupling are reported as no_coupling.
std::vector<Classification> classify_curve(AbscissaKind abscissa, CouplingKind coupling,
                                           std::span<const CurvePoint> points, const ExclusionRegion& region);

std::vector<Classification> classify_curve(const scan::ConstraintCurve& curve, const ExclusionRegion& region);

/// Combination over several regions: excluded if any region excludes, allowed
/// if at least one region covers the point and none excludes it.
std::vector<Classification> classify_curve(AbscissaKind abscissa, CouplingKind coupling,
                                           std::span<const CurvePoint> points,
                                           std::span<const ExclusionRegion> regions);

std::vector<CurvePoint> curve_points(const scan::ConstraintCurve& curve);

struct ClassificationSummary {
    std::size_t excluded = 0;
    std::size_t allowed = 0;
    std::size_t outside_region_support = 0;
    std::size_t no_coupling = 0;

    std::size_t total() const noexcept { return excluded + allowed + outside_region_support + no_coupling; }
};

ClassificationSummary summarize(std::span<const Classification> classes);

} // namespace ewit::bounds
