#pragma once

// Inversion of a target witness value into the entangling frequency and then
// into the coupling of each interaction model.

#include "ewit/potentials.hpp"

namespace ewit::inversion {

struct WitnessTarget {
    double W = 0.0;     ///< target witness expectation value
    double gamma = 0.0; ///< dephasing rate [Hz]
    double tau = 0.0;   ///< interaction time [s]

    void validate() const;
    double gamma_tau() const noexcept { return gamma * tau; }

    bool operator==(const WitnessTarget&) const = default;
};

/// A recovered coupling with the regime flags of the small-time approximation.
struct Coupling {
    double value = 0.0;
    double omega_ent_tau = 0.0;
    double gamma_tau = 0.0;
    bool valid = false;
};

/// (e^{-gamma tau} - e^{gamma tau} (1 - 4 W)) / 2, the sine of omega_ent tau.
double arcsin_argument(const WitnessTarget& target);

/// Principal-branch omega_ent [rad/s]; throws Error(unreachable_witness)
/// when no real frequency produces W at this gamma*tau.
double omega_ent_from_witness(const WitnessTarget& target);

/// Yukawa alpha [J m] at range lambda.
Coupling alpha_from_witness(const WitnessTarget& target, double lambda, const potentials::Geometry& geom);

/// Dimensionless alpha_g of the Yukawa-corrected Newtonian potential.
Coupling alpha_g_from_witness(const WitnessTarget& target, double lambda, double mass,
                              const potentials::Geometry& geom);

/// Scalar ALP coupling g_S >= 0. The scalar potential is attractive, so the
/// target must correspond to a positive entangling phase.
Coupling g_s_from_witness(const WitnessTarget& target, double m_phi_eV, const potentials::Geometry& geom);

/// Pseudoscalar ALP coupling g_P >= 0.
Coupling g_p_from_witness(const WitnessTarget& target, double m_phi_eV, const potentials::SpinConfig& spin,
                          const potentials::Geometry& geom);

} // namespace ewit::inversion
