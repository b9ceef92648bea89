#include "ewit/units.hpp"

#include <cmath>
#include <string>

#include "ewit/errors.hpp"

namespace ewit::units {

double mass_ev_to_range_m(double m_phi_eV)
{
    if (!(m_phi_eV > 0.0) || !std::isfinite(m_phi_eV))
        fail(ErrorKind::domain, "boson mass must be positive and finite, got " + std::to_string(m_phi_eV));
    return hbar_c_eV_m / m_phi_eV;
}

double range_m_to_mass_ev(double lambda_m)
{
    if (!(lambda_m > 0.0) || !std::isfinite(lambda_m))
        fail(ErrorKind::domain, "range must be positive and finite, got " + std::to_string(lambda_m));
    return hbar_c_eV_m / lambda_m;
}

} // namespace ewit::units
