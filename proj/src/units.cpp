#include "dirac1d/units.hpp"

#include <cmath>

#include "dirac1d/errors.hpp"

namespace dirac1d {

void Units::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw InvalidUnitsError("units: mass must be positive and finite");
  if (!(light_speed > 0.0) || !std::isfinite(light_speed))
    throw InvalidUnitsError("units: light speed must be positive and finite");
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw InvalidUnitsError("units: hbar must be positive and finite");
  if (!std::isfinite(length_scale()) || !std::isfinite(energy_scale()))
    throw InvalidUnitsError("units: length/energy scales overflow");
}

double to_xi(const Units& u, double x) {
  u.validate();
  return x / u.length_scale();
}

double to_x(const Units& u, double xi) {
  u.validate();
  return xi * u.length_scale();
}

double to_eps(const Units& u, double energy) {
  u.validate();
  return energy / u.energy_scale();
}

double to_energy(const Units& u, double eps) {
  u.validate();
  return eps * u.energy_scale();
}

double to_theta(const Units& u, double potential_value) {
  u.validate();
  return potential_value / u.energy_scale();
}

double to_potential(const Units& u, double theta) {
  u.validate();
  return theta * u.energy_scale();
}

}  // namespace dirac1d
