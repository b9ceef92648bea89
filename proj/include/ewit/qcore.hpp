#pragma once

// Two-qubit spatial-superposition state, element-wise dephasing, partial
// transpose and the PPT witness.
//
// Basis order is (uu, ud, du, dd) with the first letter labelling particle 1.
// Index a = 2*i + j, where i is particle 1's branch and j particle 2's.
// The partial transpose acts on the second particle.

#include <array>
#include <complex>

#include <Eigen/Core>

namespace ewit::qcore {

using Complex = std::complex<double>;
using StateVector = Eigen::Vector4cd;
using Matrix4 = Eigen::Matrix4cd;

/// Interaction phases of the evolved state. phi_global never enters rho.
struct PhaseSet {
    double phi_global = 0.0;
    double phi_1 = 0.0;
    double phi_2 = 0.0;

    /// omega_ent * tau = (phi_1 + phi_2) / 2
    double entangling_phase() const noexcept { return 0.5 * (phi_1 + phi_2); }

    bool operator==(const PhaseSet&) const = default;
};

class TwoQubitDensityMatrix {
public:
    /// Validates Hermiticity, unit trace and positivity; throws Error(domain).
    explicit TwoQubitDensityMatrix(const Matrix4& entries);

    const Matrix4& entries() const noexcept { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }

private:
    Matrix4 entries_;
};

struct WitnessEvaluation {
    double closed_form_W = 0.0;
    double numeric_min_pt_eigenvalue = 0.0;
    double negativity = 0.0;
    double gamma_tau = 0.0;
    double omega_ent_tau = 0.0;
    bool valid_approximation = false;
};

/// (e^{i phi}/2) (1, e^{i phi_2}, e^{i phi_1}, 1)
StateVector build_state(const PhaseSet& phases);

/// |psi><psi| with coherences damped by exp(-gamma tau (2 - d_ii' - d_jj')).
TwoQubitDensityMatrix density_with_dephasing(const PhaseSet& phases, double gamma, double tau);

/// rho^{T2}: <ij|rho^{T2}|i'j'> = <ij'|rho|i'j>.
Matrix4 partial_transpose_second(const TwoQubitDensityMatrix& rho);
Matrix4 partial_transpose_second(const Matrix4& m);

/// Ascending eigenvalues of a Hermitian 4x4 matrix.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& m);

/// Pure-state spectrum of rho^{T2}, ordered {+s/2, -s/2, 1/2 + c/2, 1/2 - c/2}
/// with s, c the sine and cosine of (phi_1 + phi_2)/2.
std::array<double, 4> pt_eigenvalues_closed_form(const PhaseSet& phases);

/// Pure-state negativity |sin((phi_1 + phi_2)/2)| / 2.
double negativity_closed_form(const PhaseSet& phases);

/// Most negative rho^{T2} eigenvalue on the sin(omega tau) <= 0 branch under
/// dephasing: 1/4 - e^{-g t}/4 (e^{-g t} - 2 sin(omega t)). Returned as-is
/// for positive sines too.
double witness_closed_form(double omega_ent, double gamma, double tau);

/// Same closed form in terms of the dimensionless products omega*tau, gamma*tau.
double witness_from_phase(double omega_ent_tau, double gamma_tau);

/// Closed form plus the numeric spectrum of the dephased, partially
/// transposed state.
WitnessEvaluation evaluate_witness(const PhaseSet& phases, double gamma, double tau);

/// gamma*tau < 1 and |omega_ent*tau| < 1.
bool approximation_valid(double gamma_tau, double omega_ent_tau) noexcept;

} // namespace ewit::qcore
