#pragma once

// Interaction potentials and the branch phases they imprint.
//
// Parallel configuration: particle 1 sits at x = 0, particle 2 at x = d; each
// is split along y into an "up" branch at y = 0 and a "down" branch at
// y = delta_x. Same-branch pairs are separated by (d, 0, 0), cross-branch
// pairs by (d, delta_x, 0).

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "ewit/qcore.hpp"

namespace ewit::potentials {

using Vec3 = Eigen::Vector3d;

struct Geometry {
    double d = 0.0;       ///< trap separation [m]
    double delta_x = 0.0; ///< superposition width [m]
    double tau = 0.0;     ///< interaction time [s]

    /// Throws Error(domain) unless all fields are positive and finite.
    void validate() const;

    double cross_distance() const;
    Vec3 aligned_displacement() const { return {d, 0.0, 0.0}; }
    Vec3 cross_displacement() const { return {d, delta_x, 0.0}; }

    bool operator==(const Geometry&) const = default;
};

/// Polarisation directions of the two spins. Defaults to both along the
/// separation axis.
struct SpinConfig {
    Vec3 s1_hat = Vec3::UnitX();
    Vec3 s2_hat = Vec3::UnitX();

    void validate() const;

    bool operator==(const SpinConfig& o) const { return s1_hat == o.s1_hat && s2_hat == o.s2_hat; }
};

/// U = alpha e^{-r/lambda} / r, alpha in J m.
struct Yukawa {
    double alpha = 0.0;
    double lambda = 0.0;
};

/// U = G m^2 / r (1 + alpha_g e^{-r/lambda}).
struct ModifiedNewtonian {
    double alpha_g = 0.0;
    double lambda = 0.0;
    double mass = 0.0;
};

/// Attractive scalar exchange, U = -(g_S^2/4pi) hbar c e^{-r/lambda_phi} / r.
struct ScalarAlp {
    double g_s = 0.0;
    double m_phi_eV = 0.0;
};

/// Spin-dependent pseudoscalar exchange between two electrons; contact term
/// omitted.
struct PseudoscalarAlp {
    double g_p = 0.0;
    double m_phi_eV = 0.0;
    SpinConfig spin;
};

using PotentialModel = std::variant<Yukawa, ModifiedNewtonian, ScalarAlp, PseudoscalarAlp>;

void validate(const PotentialModel& model);

/// Soft checks that do not reject the model (|alpha_g| >= 1).
std::vector<std::string> model_warnings(const PotentialModel& model);

/// Potential energy [J] at displacement r_vec [m].
double potential_energy(const PotentialModel& model, const Vec3& r_vec);

/// Pseudoscalar potential per unit g_P^2 [J].
double pseudoscalar_spatial_factor(double m_phi_eV, const SpinConfig& spin, const Vec3& r_vec);

/// Pseudoscalar cross-minus-aligned difference per unit g_P^2 [J].
double pseudoscalar_phase_factor(double m_phi_eV, const SpinConfig& spin, const Geometry& geom);

/// e^{-r_c/lambda}/r_c - e^{-d/lambda}/d [1/m], evaluated without cancellation.
double yukawa_bracket(double lambda, const Geometry& geom);

/// 1/r_c - 1/d [1/m], evaluated without cancellation.
double newtonian_bracket(const Geometry& geom);

/// phi_global = tau U(aligned)/hbar, phi_1 = phi_2 = tau (U(cross) - U(aligned))/hbar.
qcore::PhaseSet phase_pair(const PotentialModel& model, const Geometry& geom);

/// Ground-state width sqrt(hbar / (2 m omega)); omega taken as angular.
double ion_trap_delta_x(double mass, double omega);

} // namespace ewit::potentials
