#ifndef DIRAC1D_UNITS_HPP
#define DIRAC1D_UNITS_HPP

namespace dirac1d {

// Physical constants used for the dimensionless maps
//   x -> (mc/hbar) xi,  E -> mc^2 eps,  V -> mc^2 theta.
struct Units {
  double mass = 1.0;
  double light_speed = 1.0;
  double hbar = 1.0;

  void validate() const;  // throws InvalidUnitsError

  double length_scale() const { return hbar / (mass * light_speed); }
  double energy_scale() const {
    return mass * light_speed * light_speed;
  }
};

double to_xi(const Units& u, double x);
double to_x(const Units& u, double xi);
double to_eps(const Units& u, double energy);
double to_energy(const Units& u, double eps);
double to_theta(const Units& u, double potential_value);
double to_potential(const Units& u, double theta);

}  // namespace dirac1d

#endif
