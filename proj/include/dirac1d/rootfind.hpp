#ifndef DIRAC1D_ROOTFIND_HPP
#define DIRAC1D_ROOTFIND_HPP

#include <functional>
#include <utility>
#include <vector>

namespace dirac1d {

// Bisection with a secant polish; f(lo) and f(hi) must differ in sign.
double refine_root(const std::function<double(double)>& f, double lo,
                   double hi, double xtol, int max_iter = 200);

// Sample f on n+1 equispaced points and return the sub-intervals with a
// sign change (endpoints that are exact zeros count as changes).
std::vector<std::pair<double, double>> scan_brackets(
    const std::function<double(double)>& f, double lo, double hi, int n);

}  // namespace dirac1d

#endif
