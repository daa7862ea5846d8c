#ifndef DIRAC1D_TURNING_HPP
#define DIRAC1D_TURNING_HPP

#include <string>
#include <vector>

#include "dirac1d/potential.hpp"

namespace dirac1d {

// Effective turning points: the two roots of 1 + theta(xi) = |eps|.
struct TurningPoints {
  double left = 0.0;
  double right = 0.0;
  double width() const { return right - left; }
};

// Locates both roots by bisection to absolute tolerance `tol`.  Uses |eps|,
// so particle and antiparticle energies share turning points.  Throws
// NoTurningPointsError when |eps| <= 1 + theta_min and
// ConstraintViolationError when the scan finds more than two roots.
TurningPoints find_turning_points(const Potential& pot, double eps,
                                  double tol = 1e-12);

struct ConstraintReport {
  bool admissible = false;      // 1 + theta_min >= 0
  bool two_turning_points = false;
  double theta_min = 0.0;
  int worst_root_count = 0;
  std::vector<std::string> violations;
  bool ok() const { return admissible && two_turning_points; }
};

// Diagnoses the well over an energy window without throwing.
ConstraintReport validate_constraints(const Potential& pot, double eps_lo,
                                      double eps_hi, int samples = 33);

}  // namespace dirac1d

#endif
