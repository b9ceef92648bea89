#include "ewit/scan.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ewit/qcore.hpp"

namespace ewit::scan {

std::string_view to_string(ModelKind kind) noexcept
{
    switch (kind) {
    case ModelKind::yukawa: return "yukawa";
    case ModelKind::modified_newtonian: return "modified_newtonian";
    case ModelKind::scalar_alp: return "scalar_alp";
    case ModelKind::pseudoscalar_alp: return "pseudoscalar_alp";
    }
    return "unknown";
}

std::string_view to_string(AbscissaKind kind) noexcept
{
    return kind == AbscissaKind::range_m ? "range_m" : "mass_eV";
}

std::string_view to_string(CouplingKind kind) noexcept
{
    switch (kind) {
    case CouplingKind::alpha_J_m: return "alpha_J_m";
    case CouplingKind::alpha_g: return "alpha_g";
    case CouplingKind::g_S: return "g_S";
    case CouplingKind::g_P: return "g_P";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view text)
{
    for (auto k : {ModelKind::yukawa, ModelKind::modified_newtonian, ModelKind::scalar_alp,
                   ModelKind::pseudoscalar_alp})
        if (to_string(k) == text)
            return k;
    fail(ErrorKind::config, "unknown model '" + std::string(text) + "'");
}

AbscissaKind parse_abscissa_kind(std::string_view text)
{
    for (auto k : {AbscissaKind::range_m, AbscissaKind::mass_eV})
        if (to_string(k) == text)
            return k;
    fail(ErrorKind::parse, "unknown abscissa kind '" + std::string(text) + "'");
}

CouplingKind parse_coupling_kind(std::string_view text)
{
    for (auto k : {CouplingKind::alpha_J_m, CouplingKind::alpha_g, CouplingKind::g_S, CouplingKind::g_P})
        if (to_string(k) == text)
            return k;
    fail(ErrorKind::parse, "unknown coupling kind '" + std::string(text) + "'");
}

AbscissaKind abscissa_kind(ModelKind kind) noexcept
{
    return (kind == ModelKind::yukawa || kind == ModelKind::modified_newtonian) ? AbscissaKind::range_m
                                                                                : AbscissaKind::mass_eV;
}

CouplingKind coupling_kind(ModelKind kind) noexcept
{
    switch (kind) {
    case ModelKind::yukawa: return CouplingKind::alpha_J_m;
    case ModelKind::modified_newtonian: return CouplingKind::alpha_g;
    case ModelKind::scalar_alp: return CouplingKind::g_S;
    case ModelKind::pseudoscalar_alp: return CouplingKind::g_P;
    }
    return CouplingKind::alpha_J_m;
}

void Grid::validate() const
{
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
        fail(ErrorKind::config, "grid requires finite min < max");
    if (points < 2)
        fail(ErrorKind::config, "grid requires at least 2 points");
    if (log_spaced && !(min > 0.0))
        fail(ErrorKind::config, "log-spaced grid requires min > 0");
}

std::vector<double> Grid::nodes() const
{
    validate();
    std::vector<double> out(points);
    const double last = static_cast<double>(points - 1);
    if (log_spaced) {
        const double lo = std::log(min);
        const double hi = std::log(max);
        for (std::size_t i = 0; i < points; ++i)
            out[i] = std::exp(lo + (hi - lo) * (static_cast<double>(i) / last));
    } else {
        for (std::size_t i = 0; i < points; ++i)
            out[i] = min + (max - min) * (static_cast<double>(i) / last);
    }
    out.front() = min;
    out.back() = max;
    return out;
}

void ScanRequest::validate() const
{
    geom.validate();
    target.validate();
    grid.validate();
    if (target.tau != geom.tau)
        fail(ErrorKind::config, "target tau and geometry tau differ");
    if (model == ModelKind::modified_newtonian && !(particle_mass > 0.0 && std::isfinite(particle_mass)))
        fail(ErrorKind::config, "modified_newtonian scan needs a positive particle_mass");
    if (model == ModelKind::pseudoscalar_alp)
        spin.validate();
    if (!(grid.min > 0.0))
        fail(ErrorKind::config, "ranges and masses on the grid must be positive");
    if (ion_trap && (!(ion_trap->mass > 0.0) || !(ion_trap->frequency > 0.0)))
        fail(ErrorKind::config, "ion trap mass and frequency must be positive");
}

inversion::Coupling invert_at(const ScanRequest& request, double abscissa)
{
    switch (request.model) {
    case ModelKind::yukawa:
        return inversion::alpha_from_witness(request.target, abscissa, request.geom);
    case ModelKind::modified_newtonian:
        return inversion::alpha_g_from_witness(request.target, abscissa, request.particle_mass, request.geom);
    case ModelKind::scalar_alp:
        return inversion::g_s_from_witness(request.target, abscissa, request.geom);
    case ModelKind::pseudoscalar_alp:
        return inversion::g_p_from_witness(request.target, abscissa, request.spin, request.geom);
    }
    fail(ErrorKind::usage, "unhandled model kind");
}

potentials::PotentialModel model_at(const ScanRequest& request, double abscissa, double coupling)
{
    switch (request.model) {
    case ModelKind::yukawa: return potentials::Yukawa{coupling, abscissa};
    case ModelKind::modified_newtonian:
        return potentials::ModifiedNewtonian{coupling, abscissa, request.particle_mass};
    case ModelKind::scalar_alp: return potentials::ScalarAlp{coupling, abscissa};
    case ModelKind::pseudoscalar_alp: return potentials::PseudoscalarAlp{coupling, abscissa, request.spin};
    }
    fail(ErrorKind::usage, "unhandled model kind");
}

ConstraintCurve run_scan(const ScanRequest& request)
{
    request.validate();

    ConstraintCurve curve;
    curve.request = request;
    const auto nodes = request.grid.nodes();
    curve.samples.resize(nodes.size());

    // Nodes are independent; each slot is written exactly once.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CurveSample& s = curve.samples[i];
        s.abscissa = nodes[i];
        try {
            const inversion::Coupling c = invert_at(request, nodes[i]);
            s.coupling = c.value;
            s.omega_ent_tau = c.omega_ent_tau;
            s.valid = c.valid;
            s.warnings = potentials::model_warnings(model_at(request, nodes[i], c.value));
        } catch (const Error& e) {
            s.coupling = std::numeric_limits<double>::quiet_NaN();
            s.valid = false;
            s.error = e.kind();
        }
    }
    return curve;
}

RoundTripReport round_trip_check(const ConstraintCurve& curve, const ScanRequest& request)
{
    if (!(curve.request == request))
        fail(ErrorKind::usage, "curve was produced from a different scan request");

    RoundTripReport report;
    const double target = request.target.W;
    for (const CurveSample& s : curve.samples) {
        if (!s.valid || s.error)
            continue;
        const auto phases = potentials::phase_pair(model_at(request, s.abscissa, s.coupling), request.geom);
        const double omega = phases.entangling_phase() / request.geom.tau;
        const double w = qcore::witness_closed_form(omega, request.target.gamma, request.geom.tau);
        const double err = target != 0.0 ? std::abs(w - target) / std::abs(target) : std::abs(w);
        report.max_relative_error = std::max(report.max_relative_error, err);
        ++report.checked;
    }
    return report;
}

} // namespace ewit::scan
