#include "ewit/potentials.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ewit/errors.hpp"
#include "ewit/units.hpp"

namespace ewit::potentials {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const std::string& name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        fail(ErrorKind::domain, name + " must be positive and finite, got " + std::to_string(v));
}

void require_finite(double v, const std::string& name)
{
    if (!std::isfinite(v))
        fail(ErrorKind::domain, name + " must be finite");
}

double separation(const Vec3& r_vec)
{
    const double r = r_vec.norm();
    if (!(r > 0.0) || !std::isfinite(r))
        fail(ErrorKind::domain, "potential requested at zero or non-finite separation");
    return r;
}

/// -(g^2/4pi) hbar c per unit g^2, the Yukawa strength of scalar exchange.
constexpr double scalar_strength_per_g2()
{
    return -units::hbar * units::c / (4.0 * kPi);
}

} // namespace

void Geometry::validate() const
{
    require_positive(d, "d");
    require_positive(delta_x, "delta_x");
    require_positive(tau, "tau");
}

double Geometry::cross_distance() const
{
    return std::hypot(d, delta_x);
}

void SpinConfig::validate() const
{
    for (const Vec3* s : {&s1_hat, &s2_hat}) {
        if (!s->allFinite() || std::abs(s->norm() - 1.0) > 1e-12)
            fail(ErrorKind::domain, "spin polarisation vectors must be unit length");
    }
}

void validate(const PotentialModel& model)
{
    std::visit(overloaded{
                   [](const Yukawa& m) {
                       require_finite(m.alpha, "alpha");
                       require_positive(m.lambda, "lambda");
                   },
                   [](const ModifiedNewtonian& m) {
                       require_finite(m.alpha_g, "alpha_g");
                       require_positive(m.lambda, "lambda");
                       require_positive(m.mass, "mass");
                   },
                   [](const ScalarAlp& m) {
                       require_finite(m.g_s, "g_S");
                       require_positive(m.m_phi_eV, "m_phi");
                   },
                   [](const PseudoscalarAlp& m) {
                       require_finite(m.g_p, "g_P");
                       require_positive(m.m_phi_eV, "m_phi");
                       m.spin.validate();
                   },
               },
               model);
}

std::vector<std::string> model_warnings(const PotentialModel& model)
{
    std::vector<std::string> out;
    if (const auto* mn = std::get_if<ModifiedNewtonian>(&model); mn && std::abs(mn->alpha_g) >= 1.0)
        out.emplace_back("alpha_g_not_below_unity");
    return out;
}

double pseudoscalar_spatial_factor(double m_phi_eV, const SpinConfig& spin, const Vec3& r_vec)
{
    const double r = separation(r_vec);
    const double lam = units::mass_ev_to_range_m(m_phi_eV);
    const Vec3 r_hat = r_vec / r;

    // Spin-1/2 expectations in product polarised states.
    const double s1s2 = 0.25 * spin.s1_hat.dot(spin.s2_hat);
    const double proj = 0.25 * spin.s1_hat.dot(r_hat) * spin.s2_hat.dot(r_hat);

    const double r2 = r * r;
    const double r3 = r2 * r;
    const double dipole = s1s2 * (1.0 / (lam * r2) + 1.0 / r3);
    const double tensor = proj * (1.0 / (lam * lam * r) + 3.0 / (lam * r2) + 3.0 / r3);

    // 1/(M1 M2) -> (hbar/(m_e c))^2 and an overall hbar c restore SI units.
    const double lambda_e = units::hbar / (units::m_e * units::c);
    const double prefactor = -units::hbar * units::c * lambda_e * lambda_e / (4.0 * kPi);
    return prefactor * std::exp(-r / lam) * (dipole - tensor);
}

double pseudoscalar_phase_factor(double m_phi_eV, const SpinConfig& spin, const Geometry& geom)
{
    return pseudoscalar_spatial_factor(m_phi_eV, spin, geom.cross_displacement())
        - pseudoscalar_spatial_factor(m_phi_eV, spin, geom.aligned_displacement());
}

double potential_energy(const PotentialModel& model, const Vec3& r_vec)
{
    validate(model);
    const double r = separation(r_vec);
    return std::visit(
        overloaded{
            [r](const Yukawa& m) { return m.alpha * std::exp(-r / m.lambda) / r; },
            [r](const ModifiedNewtonian& m) {
                return units::G * m.mass * m.mass / r * (1.0 + m.alpha_g * std::exp(-r / m.lambda));
            },
            [r](const ScalarAlp& m) {
                const double lam = units::mass_ev_to_range_m(m.m_phi_eV);
                return m.g_s * m.g_s * scalar_strength_per_g2() * std::exp(-r / lam) / r;
            },
            [&r_vec](const PseudoscalarAlp& m) {
                return m.g_p * m.g_p * pseudoscalar_spatial_factor(m.m_phi_eV, m.spin, r_vec);
            },
        },
        model);
}

double newtonian_bracket(const Geometry& geom)
{
    const double rc = geom.cross_distance();
    // r_c - d = dx^2 / (r_c + d)
    const double excess = geom.delta_x * geom.delta_x / (rc + geom.d);
    return -excess / (rc * geom.d);
}

double yukawa_bracket(double lambda, const Geometry& geom)
{
    require_positive(lambda, "lambda");
    const double rc = geom.cross_distance();
    const double excess = geom.delta_x * geom.delta_x / (rc + geom.d);
    // e^{-d/l} [ expm1(-(r_c - d)/l) / r_c + (1/r_c - 1/d) ]; both terms negative.
    return std::exp(-geom.d / lambda) * (std::expm1(-excess / lambda) / rc + newtonian_bracket(geom));
}

qcore::PhaseSet phase_pair(const PotentialModel& model, const Geometry& geom)
{
    geom.validate();
    validate(model);

    // Cross-minus-aligned energy difference [J].
    const double delta_u = std::visit(
        overloaded{
            [&](const Yukawa& m) { return m.alpha * yukawa_bracket(m.lambda, geom); },
            [&](const ModifiedNewtonian& m) {
                const double gm2 = units::G * m.mass * m.mass;
                return gm2 * (newtonian_bracket(geom) + m.alpha_g * yukawa_bracket(m.lambda, geom));
            },
            [&](const ScalarAlp& m) {
                const double alpha = m.g_s * m.g_s * scalar_strength_per_g2();
                return alpha * yukawa_bracket(units::mass_ev_to_range_m(m.m_phi_eV), geom);
            },
            [&](const PseudoscalarAlp& m) {
                return m.g_p * m.g_p * pseudoscalar_phase_factor(m.m_phi_eV, m.spin, geom);
            },
        },
        model);

    const double scale = geom.tau / units::hbar;
    qcore::PhaseSet phases;
    phases.phi_global = scale * potential_energy(model, geom.aligned_displacement());
    phases.phi_1 = scale * delta_u;
    phases.phi_2 = phases.phi_1;
    return phases;
}

double ion_trap_delta_x(double mass, double omega)
{
    require_positive(mass, "ion mass");
    require_positive(omega, "trap frequency");
    return std::sqrt(units::hbar / (2.0 * mass * omega));
}

} // namespace ewit::potentials
