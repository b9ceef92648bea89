#include "ewit/inversion.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ewit/errors.hpp"
#include "ewit/qcore.hpp"
#include "ewit/units.hpp"

namespace ewit::inversion {

namespace {

// Brackets below this magnitude mean the interaction is exponentially
// screened out of the geometry.
constexpr double kDegenerateBracket = 1e-300;

Coupling make_coupling(double value, const WitnessTarget& target, double omega_ent)
{
    if (!std::isfinite(value))
        fail(ErrorKind::degenerate_geometry, "coupling overflowed; geometry factor too small");
    Coupling c;
    c.value = value;
    c.omega_ent_tau = omega_ent * target.tau;
    c.gamma_tau = target.gamma_tau();
    c.valid = qcore::approximation_valid(c.gamma_tau, c.omega_ent_tau);
    return c;
}

void check_consistent(const WitnessTarget& target, const potentials::Geometry& geom)
{
    target.validate();
    geom.validate();
    if (target.tau != geom.tau)
        fail(ErrorKind::usage, "witness target and geometry disagree on the interaction time");
}

double checked_bracket(double lambda, const potentials::Geometry& geom)
{
    const double bracket = potentials::yukawa_bracket(lambda, geom);
    if (!(std::abs(bracket) >= kDegenerateBracket))
        fail(ErrorKind::degenerate_geometry,
             "Yukawa geometry factor vanishes at lambda = " + std::to_string(lambda) + " m");
    return bracket;
}

} // namespace

void WitnessTarget::validate() const
{
    if (!std::isfinite(W))
        fail(ErrorKind::domain, "witness target must be finite");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        fail(ErrorKind::domain, "gamma must be non-negative and finite");
    if (!(tau > 0.0) || !std::isfinite(tau))
        fail(ErrorKind::domain, "tau must be positive and finite");
}

double arcsin_argument(const WitnessTarget& target)
{
    const double gt = target.gamma_tau();
    return 0.5 * (std::exp(-gt) - std::exp(gt) * (1.0 - 4.0 * target.W));
}

double omega_ent_from_witness(const WitnessTarget& target)
{
    target.validate();
    const double arg = arcsin_argument(target);
    if (!(std::abs(arg) <= 1.0))
        fail(ErrorKind::unreachable_witness,
             "no entangling frequency reaches W = " + std::to_string(target.W)
                 + " at gamma*tau = " + std::to_string(target.gamma_tau()));
    return std::asin(arg) / target.tau;
}

Coupling alpha_from_witness(const WitnessTarget& target, double lambda, const potentials::Geometry& geom)
{
    check_consistent(target, geom);
    const double omega = omega_ent_from_witness(target);
    const double bracket = checked_bracket(lambda, geom);
    return make_coupling(units::hbar * omega / bracket, target, omega);
}

Coupling alpha_g_from_witness(const WitnessTarget& target, double lambda, double mass,
                              const potentials::Geometry& geom)
{
    check_consistent(target, geom);
    if (!(mass > 0.0) || !std::isfinite(mass))
        fail(ErrorKind::domain, "particle mass must be positive and finite");
    const double omega = omega_ent_from_witness(target);
    const double bracket = checked_bracket(lambda, geom);
    const double gm2 = units::G * mass * mass;
    const double numerator = units::hbar / gm2 * omega - potentials::newtonian_bracket(geom);
    return make_coupling(numerator / bracket, target, omega);
}

Coupling g_s_from_witness(const WitnessTarget& target, double m_phi_eV, const potentials::Geometry& geom)
{
    const double lambda = units::mass_ev_to_range_m(m_phi_eV);
    const Coupling yukawa = alpha_from_witness(target, lambda, geom);
    // Scalar exchange is a Yukawa potential of strength -(g_S^2/4pi) hbar c.
    const double g2 = -4.0 * std::numbers::pi * yukawa.value / (units::hbar * units::c);
    if (g2 < 0.0)
        fail(ErrorKind::sign_inconsistent_witness,
             "W = " + std::to_string(target.W)
                 + " needs a repulsive interaction; scalar exchange is attractive");
    Coupling out = yukawa;
    out.value = g2 > 0.0 ? std::sqrt(g2) : 0.0;
    return out;
}

Coupling g_p_from_witness(const WitnessTarget& target, double m_phi_eV, const potentials::SpinConfig& spin,
                          const potentials::Geometry& geom)
{
    check_consistent(target, geom);
    spin.validate();
    const double omega = omega_ent_from_witness(target);
    const double factor = potentials::pseudoscalar_phase_factor(m_phi_eV, spin, geom);
    if (!(std::abs(factor) >= kDegenerateBracket))
        fail(ErrorKind::degenerate_geometry, "pseudoscalar phase factor vanishes for this geometry");
    const double g2 = units::hbar * omega / factor;
    if (g2 < 0.0)
        fail(ErrorKind::sign_inconsistent_witness,
             "W = " + std::to_string(target.W) + " has the wrong sign for this spin configuration");
    return make_coupling(g2 > 0.0 ? std::sqrt(g2) : 0.0, target, omega);
}

} // namespace ewit::inversion
