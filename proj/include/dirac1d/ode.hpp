#ifndef DIRAC1D_ODE_HPP
#define DIRAC1D_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "dirac1d/errors.hpp"

namespace dirac1d {

template <int N>
using OdeVec = std::array<double, N>;

template <int N>
struct OdeNode {
  double t;
  OdeVec<N> y;
  OdeVec<N> dy;
};

struct OdeOptions {
  double tol = 1e-12;      // mixed abs/rel per-step target
  double max_step = 0.0;   // 0: no cap
  long max_steps = 4000000;
};

// Dormand-Prince 5(4) with stored nodes (value + derivative at every
// accepted step).  Integrates from `from` to `to` in either direction and
// lands exactly on every breakpoint in between, so piecewise-smooth
// right-hand sides stay at full order.
template <int N, class RHS>
std::vector<OdeNode<N>> integrate_ode(const RHS& rhs, double from, double to,
                                      OdeVec<N> y0, const OdeOptions& opt = {},
                                      std::vector<double> breakpoints = {}) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  if (from == to) throw Error("integrate_ode: empty interval");
  const double dir = (to > from) ? 1.0 : -1.0;

  // checkpoints the trajectory must land on
  std::vector<double> stops;
  for (double b : breakpoints)
    if ((b - from) * dir > 0.0 && (to - b) * dir > 0.0) stops.push_back(b);
  stops.push_back(to);
  std::sort(stops.begin(), stops.end());
  if (dir < 0) std::reverse(stops.begin(), stops.end());

  std::vector<OdeNode<N>> out;
  out.reserve(1024);

  double t = from;
  OdeVec<N> y = y0;
  OdeVec<N> k1 = rhs(t, y);
  out.push_back({t, y, k1});

  double h = dir * std::min(std::fabs(to - from) / 100.0,
                            opt.max_step > 0 ? opt.max_step : 1e300);
  if (h == 0.0) h = dir * 1e-8;

  std::size_t stop_idx = 0;
  long steps = 0;
  auto scale = [&](const OdeVec<N>& a, const OdeVec<N>& b) {
    double m = 0.0;
    for (int i = 0; i < N; ++i)
      m = std::max(m, std::max(std::fabs(a[i]), std::fabs(b[i])));
    return 1.0 + m;
  };

  while (stop_idx < stops.size()) {
    const double target = stops[stop_idx];
    bool clipped = false;
    if ((t + h - target) * dir >= 0.0) {
      h = target - t;
      clipped = true;
    }
    if (std::fabs(h) < 1e-14 * (1.0 + std::fabs(t))) {
      if (clipped) {  // essentially at the checkpoint already
        t = target;
        ++stop_idx;
        h = dir * 1e-6 * (1.0 + std::fabs(t));
        continue;
      }
      std::ostringstream msg;
      msg << "ode: step underflow near t = " << t;
      throw StiffnessError(msg.str());
    }
    if (++steps > opt.max_steps) throw StiffnessError("ode: step budget exhausted");

    OdeVec<N> k2, k3, k4, k5, k6, k7, yt, y5;
    for (int i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    k2 = rhs(t + h / 5.0, yt);
    for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = rhs(t + 3.0 * h / 10.0, yt);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = rhs(t + 4.0 * h / 5.0, yt);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] +
              h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = rhs(t + 8.0 * h / 9.0, yt);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    k6 = rhs(t + h, yt);
    for (int i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    k7 = rhs(t + h, y5);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      err = std::max(err, std::fabs(ei));
    }
    const double sc = opt.tol * scale(y, y5);

    if (err <= sc) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
      out.push_back({t, y, k1});
      if (clipped && t == target) ++stop_idx;
    }
    double factor = (err > 0.0) ? 0.9 * std::pow(sc / err, 0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
    if (opt.max_step > 0.0 && std::fabs(h) > opt.max_step)
      h = dir * opt.max_step;
  }
  return out;
}

}  // namespace dirac1d

#endif
