#ifndef DIRAC1D_SPINOR_HPP
#define DIRAC1D_SPINOR_HPP

#include <cmath>

namespace dirac1d {

// Real two-component wave function value at a point.
struct Spinor {
  double psi1 = 0.0;
  double psi2 = 0.0;

  double norm() const { return std::hypot(psi1, psi2); }
  // P = -psi2/psi1 (undefined at psi1 nodes; callers guard)
  double ratio() const { return -psi2 / psi1; }
};

// Dense bound-state (or trial-state) evaluator on an interval around the
// well.  Implementations are scale-covariant: multiplying the state by a
// constant leaves every ratio-type functional unchanged.
class SpinorSource {
 public:
  virtual ~SpinorSource() = default;
  virtual double epsilon() const = 0;
  virtual Spinor eval(double xi) const = 0;
  // interior stitching point (the matching point of two-sided shooting)
  virtual double seam() const = 0;
};

}  // namespace dirac1d

#endif
