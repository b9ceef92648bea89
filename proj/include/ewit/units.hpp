#pragma once

// Physical constants and the two mass/range conversions. Everything inside the
// library is SI; masses of exchanged bosons enter in eV and are converted here.

namespace ewit::units {

/// CODATA 2018 recommended values.
///   hbar     1.054571817e-34 J s     (exact in the 2019 SI)
///   G        6.67430e-11 m^3 kg^-1 s^-2
///   m_e      9.1093837015e-31 kg
///   c        299792458 m/s           (exact)
///   e        1.602176634e-19 C       (exact)
struct PhysicalConstants {
    double hbar;
    double G;
    double m_e;
    double c;
    double e_charge;
    double hbar_c_eV_m;
};

inline constexpr double hbar = 1.054571817e-34;
inline constexpr double G = 6.67430e-11;
inline constexpr double m_e = 9.1093837015e-31;
inline constexpr double c = 299792458.0;
inline constexpr double e_charge = 1.602176634e-19;
/// hbar*c in eV m, i.e. the reduced Compton wavelength of a 1 eV boson.
inline constexpr double hbar_c_eV_m = hbar * c / e_charge;

inline constexpr PhysicalConstants constants{hbar, G, m_e, c, e_charge, hbar_c_eV_m};

/// Reduced Compton wavelength hbar/(m c) of a boson of mass `m_phi_eV`.
double mass_ev_to_range_m(double m_phi_eV);

/// Inverse of mass_ev_to_range_m.
double range_m_to_mass_ev(double lambda_m);

} // namespace ewit::units
