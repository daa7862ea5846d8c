#ifndef DIRAC1D_QUANTIZATION_HPP
#define DIRAC1D_QUANTIZATION_HPP

#include <span>
#include <vector>

#include "dirac1d/potential.hpp"
#include "dirac1d/quadrature.hpp"
#include "dirac1d/shooting.hpp"
#include "dirac1d/spinor.hpp"
#include "dirac1d/turning.hpp"
#include "dirac1d/units.hpp"

namespace dirac1d {

struct QuantizationOptions {
  double quad_tol = 1e-10;
  int max_depth = 30;
  double endpoint_nudge = 1e-11;    // inward shift of the turning points
  double exclusion = 1e-18;         // endpoint Cauchy-test parameter
  double flat_turning_tol = 1e-8;   // reject |dtheta/dxi| below this
};

struct QuantizationReport {
  double epsilon = 0.0;
  double wkb_integral = 0.0;      // int kappa dxi
  double subwave_integral = 0.0;  // -int P dlambda/dxi / (P^2+lambda^2) dxi
  double total_over_pi = 0.0;
  int nearest_level = 0;          // round(total/pi) - 1
  int level = 0;                  // the level residual is measured against
  double residual = 0.0;          // total - (level+1) pi
  double endpoint_cauchy_gap = 0.0;
  TurningPoints turning_points;
  double total() const { return wkb_integral + subwave_integral; }
};

struct IntegrandSample {
  double value = 0.0;
  bool endpoint_regime = false;  // kappa below cutoff; quadrature transform
                                 // owns this zone
};

// Scattered-sub-wave integrand in spinor form,
//   (eps dtheta/dxi / kappa) psi1 psi2 /
//       ((1+theta+eps) psi2^2 - (1+theta-eps) psi1^2),
// equal to P lambda' / (P^2 + lambda^2) wherever psi1 != 0.  The
// denominator is strictly positive between the turning points, so psi1
// nodes are regular points here.
IntegrandSample subwave_integrand(const Potential& pot, double eps, double xi,
                                  const Spinor& y);

// Ratio form of the same quantity (cross-check only; P poles excluded).
double subwave_integrand_ratio(const Potential& pot, double eps, double xi,
                               double p_ratio);

// Quantization total wkb + subwave compared against (level+1) pi.
// level < 0 measures against the nearest integer level.
QuantizationReport evaluate_quantization(const Potential& pot,
                                         const SpinorSource& src,
                                         int level = -1,
                                         const QuantizationOptions& opt = {});

// Same total evaluated in an arbitrary representation reached from the
// sigma_y/sigma_z one by the real rotation R(angle); angle = pi/4 is the
// Jackiw-Rebbi representation (alpha = sigma_y, beta = sigma_x) where the
// correction reads (eps dtheta / 2 kappa) (psi1'^2 - psi2'^2) / W'.
QuantizationReport jackiw_rebbi_form(const Potential& pot,
                                     const SpinorSource& src, int level = -1,
                                     double angle = 0.78539816339744830962,
                                     const QuantizationOptions& opt = {});

struct NegativeEnergyReport {
  double total_positive = 0.0;
  double total_negative = 0.0;  // for (-eps, sigma_x Psi)
  double difference = 0.0;
};

NegativeEnergyReport negative_energy_check(const Potential& pot,
                                           const EigenSolution& sol,
                                           const QuantizationOptions& opt = {});

// Physical-units route: K = sqrt(E^2 - (mc^2+V)^2) integrated in x.
QuantizationReport evaluate_quantization_physical(
    const Units& units, const Potential& pot, const SpinorSource& src,
    int level = -1, const QuantizationOptions& opt = {});

struct SolveOptions {
  QuantizationOptions quad;
  ShootingOptions shoot;
  double eps_tol = 1e-10;
  int scan_points = 48;
};

struct SolvedLevel {
  int n = 0;
  double epsilon = 0.0;
  QuantizationReport report;
};

// Roots of total(eps) = (n+1) pi by bisection; the trial state at every
// probed eps is re-solved by two-sided shooting (the condition depends on
// the wave function itself).
std::vector<SolvedLevel> solve_levels(const Potential& pot,
                                      std::span<const int> n_list,
                                      double eps_lo, double eps_hi,
                                      const SolveOptions& opt = {});

}  // namespace dirac1d

#endif
