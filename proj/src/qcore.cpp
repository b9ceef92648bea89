#include "ewit/qcore.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ewit/errors.hpp"

namespace ewit::qcore {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-12;

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v))
        fail(ErrorKind::domain, std::string(name) + " must be finite");
}

void require_non_negative(double v, const char* name)
{
    require_finite(v, name);
    if (v < 0.0)
        fail(ErrorKind::domain, std::string(name) + " must be non-negative, got " + std::to_string(v));
}

} // namespace

TwoQubitDensityMatrix::TwoQubitDensityMatrix(const Matrix4& entries)
    : entries_(entries)
{
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const Complex v = entries_(r, c);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                fail(ErrorKind::domain, "density matrix has non-finite entries");
            if (std::abs(v - std::conj(entries_(c, r))) > kHermitianTol)
                fail(ErrorKind::domain, "density matrix is not Hermitian");
        }
    }
    if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > kTraceTol)
        fail(ErrorKind::domain, "density matrix trace differs from 1");
    if (hermitian_eigenvalues(entries_)[0] < -kPsdTol)
        fail(ErrorKind::domain, "density matrix is not positive semidefinite");
}

StateVector build_state(const PhaseSet& phases)
{
    require_finite(phases.phi_global, "phi_global");
    require_finite(phases.phi_1, "phi_1");
    require_finite(phases.phi_2, "phi_2");

    const Complex global = std::polar(0.5, phases.phi_global);
    StateVector psi;
    psi << global, global * std::polar(1.0, phases.phi_2),
        global * std::polar(1.0, phases.phi_1), global;
    return psi;
}

TwoQubitDensityMatrix density_with_dephasing(const PhaseSet& phases, double gamma, double tau)
{
    require_non_negative(gamma, "gamma");
    require_non_negative(tau, "tau");

    const StateVector psi = build_state(phases);
    Matrix4 rho = psi * psi.adjoint();

    const double gt = gamma * tau;
    const double one = std::exp(-gt);
    const double two = std::exp(-2.0 * gt);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const int mismatches = ((a >> 1) != (b >> 1)) + ((a & 1) != (b & 1));
            if (mismatches == 1)
                rho(a, b) *= one;
            else if (mismatches == 2)
                rho(a, b) *= two;
        }
    }
    // Hermitize to clear rounding from the outer product.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return TwoQubitDensityMatrix(rho);
}

Matrix4 partial_transpose_second(const Matrix4& m)
{
    Matrix4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return out;
}

Matrix4 partial_transpose_second(const TwoQubitDensityMatrix& rho)
{
    return partial_transpose_second(rho.entries());
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4& m)
{
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::domain, "Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

std::array<double, 4> pt_eigenvalues_closed_form(const PhaseSet& phases)
{
    const double half = phases.entangling_phase();
    const double s = 0.5 * std::sin(half);
    const double c = 0.5 * std::cos(half);
    return {s, -s, 0.5 + c, 0.5 - c};
}

double negativity_closed_form(const PhaseSet& phases)
{
    return 0.5 * std::abs(std::sin(phases.entangling_phase()));
}

double witness_closed_form(double omega_ent, double gamma, double tau)
{
    require_finite(omega_ent, "omega_ent");
    require_non_negative(gamma, "gamma");
    require_non_negative(tau, "tau");

    return witness_from_phase(omega_ent * tau, gamma * tau);
}

double witness_from_phase(double omega_ent_tau, double gamma_tau)
{
    const double decay = std::exp(-gamma_tau);
    return 0.25 - 0.25 * decay * (decay - 2.0 * std::sin(omega_ent_tau));
}

bool approximation_valid(double gamma_tau, double omega_ent_tau) noexcept
{
    return gamma_tau < 1.0 && std::abs(omega_ent_tau) < 1.0;
}

WitnessEvaluation evaluate_witness(const PhaseSet& phases, double gamma, double tau)
{
    const TwoQubitDensityMatrix rho = density_with_dephasing(phases, gamma, tau);
    const auto spectrum = hermitian_eigenvalues(partial_transpose_second(rho));

    WitnessEvaluation out;
    out.gamma_tau = gamma * tau;
    out.omega_ent_tau = phases.entangling_phase();
    out.closed_form_W = witness_from_phase(out.omega_ent_tau, out.gamma_tau);
    out.numeric_min_pt_eigenvalue = spectrum[0];
    for (double ev : spectrum)
        if (ev < 0.0)
            out.negativity -= ev;
    out.valid_approximation = approximation_valid(out.gamma_tau, out.omega_ent_tau);
    return out;
}

} // namespace ewit::qcore
