#include "dirac1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirac1d/errors.hpp"

namespace dirac1d {

namespace {

// Kronrod-15 abscissae (non-negative half) and weights; Gauss-7 weights
// attach to every second Kronrod node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a,
                   double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
  for (int j = 0; j < 3; ++j)
    resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  const double kr = resk * h;
  return {kr, std::fabs((resk - resg) * h)};
}

struct Panel {
  double a, b;
  int depth;
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, const QuadOptions& opt,
                              const std::vector<double>& split_points) {
  QuadResult res;
  if (a == b) return res;
  const double sign = (a < b) ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);

  std::vector<double> edges = {lo, hi};
  for (double s : split_points)
    if (s > lo && s < hi) edges.push_back(s);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Panel> stack;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    stack.push_back({edges[i], edges[i + 1], 0});

  const double span = hi - lo;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const auto est = gk15(f, p.a, p.b);
    res.evaluations += 15;
    if (!std::isfinite(est.kronrod)) {
      std::ostringstream msg;
      msg << "quadrature: non-finite integrand on [" << p.a << ", " << p.b
          << "]";
      throw QuadratureError(msg.str());
    }
    // local share of the absolute budget, proportional to panel width
    const double share = opt.abs_tol * std::max((p.b - p.a) / span, 1e-300);
    if (est.error <= share || est.error <= 1e-300) {
      res.value += est.kronrod;
      res.error_estimate += est.error;
      continue;
    }
    if (p.depth >= opt.max_depth) {
      std::ostringstream msg;
      msg << "quadrature: interval [" << p.a << ", " << p.b
          << "] failed to converge (err " << est.error << " > " << share
          << ") after " << opt.max_depth << " bisections";
      throw QuadratureError(msg.str());
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({p.a, mid, p.depth + 1});
    stack.push_back({mid, p.b, p.depth + 1});
  }
  res.value *= sign;
  return res;
}

}  // namespace dirac1d
