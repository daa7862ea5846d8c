#include "dirac1d/rootfind.hpp"

#include <cmath>

#include "dirac1d/errors.hpp"

namespace dirac1d {

double refine_root(const std::function<double(double)>& f, double lo,
                   double hi, double xtol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw BracketError("refine_root: no sign change in [lo, hi]");
  for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
    // secant proposal, kept strictly inside; fall back to the midpoint
    double mid = 0.5 * (lo + hi);
    if (fhi != flo) {
      const double sec = lo - flo * (hi - lo) / (fhi - flo);
      const double margin = 0.01 * (hi - lo);
      if (sec > lo + margin && sec < hi - margin && (it % 2 == 0)) mid = sec;
    }
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::pair<double, double>> scan_brackets(
    const std::function<double(double)>& f, double lo, double hi, int n) {
  std::vector<std::pair<double, double>> out;
  double xa = lo, fa = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double xb = lo + (hi - lo) * i / n;
    const double fb = f(xb);
    if (fa == 0.0 || std::signbit(fa) != std::signbit(fb))
      out.emplace_back(xa, xb);
    xa = xb;
    fa = fb;
  }
  return out;
}

}  // namespace dirac1d
