#pragma once

// One-dimensional sweeps of range or boson mass producing constraint curves.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ewit/errors.hpp"
#include "ewit/inversion.hpp"
#include "ewit/potentials.hpp"

namespace ewit::scan {

enum class ModelKind { yukawa, modified_newtonian, scalar_alp, pseudoscalar_alp };

/// What the abscissa of a curve measures.
enum class AbscissaKind { range_m, mass_eV };

/// What the ordinate of a curve measures.
enum class CouplingKind { alpha_J_m, alpha_g, g_S, g_P };

std::string_view to_string(ModelKind kind) noexcept;
std::string_view to_string(AbscissaKind kind) noexcept;
std::string_view to_string(CouplingKind kind) noexcept;
ModelKind parse_model_kind(std::string_view text);
AbscissaKind parse_abscissa_kind(std::string_view text);
CouplingKind parse_coupling_kind(std::string_view text);

AbscissaKind abscissa_kind(ModelKind kind) noexcept;
CouplingKind coupling_kind(ModelKind kind) noexcept;

struct Grid {
    double min = 0.0;
    double max = 0.0;
    std::size_t points = 200;
    bool log_spaced = true;

    void validate() const;
    /// Strictly increasing nodes; the endpoints are exactly min and max.
    std::vector<double> nodes() const;

    bool operator==(const Grid&) const = default;
};

struct IonTrap {
    double mass = 0.0;      ///< ion mass [kg]
    double frequency = 0.0; ///< angular trap frequency [rad/s]

    bool operator==(const IonTrap&) const = default;
};

struct ScanRequest {
    ModelKind model = ModelKind::yukawa;
    potentials::Geometry geom;
    inversion::WitnessTarget target;
    Grid grid;
    double particle_mass = 0.0; ///< modified_newtonian only [kg]
    potentials::SpinConfig spin; ///< pseudoscalar_alp only
    std::optional<IonTrap> ion_trap; ///< provenance of geom.delta_x for ALP scans

    void validate() const;

    bool operator==(const ScanRequest&) const = default;
};

struct CurveSample {
    double abscissa = 0.0;
    double coupling = 0.0; ///< NaN when `error` is set
    double omega_ent_tau = 0.0;
    bool valid = false;
    std::optional<ErrorKind> error;
    std::vector<std::string> warnings;
};

struct ConstraintCurve {
    ScanRequest request;
    std::vector<CurveSample> samples;
};

/// Inverts the target at every grid node. Per-point failures are recorded in
/// the sample; only a malformed request throws.
ConstraintCurve run_scan(const ScanRequest& request);

/// Coupling of the request's model at one abscissa.
inversion::Coupling invert_at(const ScanRequest& request, double abscissa);

/// The potential a sample stands for.
potentials::PotentialModel model_at(const ScanRequest& request, double abscissa, double coupling);

struct RoundTripReport {
    double max_relative_error = 0.0;
    std::size_t checked = 0;
    bool empty() const noexcept { return checked == 0; }
};

/// Re-derives phases from every valid sample and compares the forward witness
/// with the target. Throws Error(usage) if the curve was made from another request.
RoundTripReport round_trip_check(const ConstraintCurve& curve, const ScanRequest& request);

} // namespace ewit::scan
