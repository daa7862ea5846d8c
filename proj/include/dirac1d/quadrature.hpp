#ifndef DIRAC1D_QUADRATURE_HPP
#define DIRAC1D_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dirac1d {

struct QuadOptions {
  double abs_tol = 1e-10;
  int max_depth = 30;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) by interval bisection.  `split_points`
// inside (a, b) become initial subdivision boundaries (kinks, seams).
// Throws QuadratureError naming the stuck interval when max_depth is hit
// with the local error still above its share of the budget.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadOptions& opt = {},
                              const std::vector<double>& split_points = {});

}  // namespace dirac1d

#endif
