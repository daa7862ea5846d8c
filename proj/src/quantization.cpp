#include "dirac1d/quantization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dirac1d/errors.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

namespace {

constexpr double kPi = std::numbers::pi;

double kappa_sq(const Potential& pot, double eps, double xi) {
  const double w = 1.0 + pot.value(xi);
  return eps * eps - w * w;
}

// Sub-wave integrand in the rotated representation R(angle); angle = 0 is
// the sigma_y/sigma_z form, pi/4 the Jackiw-Rebbi one.  All angles give
// the same value up to rounding; the sign convention makes
//   total = int (kappa + f) dxi = (n+1) pi.
double rep_integrand(const Potential& pot, double eps, double xi,
                     const Spinor& y, double angle) {
  const double theta = pot.value(xi);
  const double dtheta = pot.derivative(xi);
  const double a = 1.0 + theta + eps;
  const double b = 1.0 + theta - eps;
  const double k2 = eps * eps - (1.0 + theta) * (1.0 + theta);
  if (k2 <= 0.0) return 0.0;  // outside the open allowed region
  const double kappa = std::sqrt(k2);

  const double c = std::cos(angle), s = std::sin(angle);
  const double p1 = c * y.psi1 - s * y.psi2;
  const double p2 = s * y.psi1 + c * y.psi2;
  // derivatives from the first-order system, then rotated
  const double d1 = a * y.psi2;
  const double d2 = b * y.psi1;
  const double q1 = c * d1 - s * d2;
  const double q2 = s * d1 + c * d2;
  const double wr = q1 * p2 - q2 * p1;

  const double c2 = std::cos(2.0 * angle), s2 = std::sin(2.0 * angle);
  const double bracket = c2 * 2.0 * p1 * p2 - s2 * (p1 * p1 - p2 * p2);
  return -(eps * dtheta) * bracket / (2.0 * kappa * wr);
}

struct HalfDomain {
  double endpoint;   // nudged turning point
  double inner;      // seam side
  double dir;        // +1: xi = endpoint - t^2 (right half), -1: left half
  double t_max;
};

std::vector<double> mapped_splits(const Potential& pot, const HalfDomain& h) {
  std::vector<double> t_splits;
  for (double b : pot.breakpoints()) {
    const double lo = std::min(h.endpoint, h.inner);
    const double hi = std::max(h.endpoint, h.inner);
    if (b > lo && b < hi)
      t_splits.push_back(std::sqrt(h.dir * (h.endpoint - b)));
  }
  return t_splits;
}

// integral of f over the half-domain with the square-root endpoint map
double half_integral(const std::function<double(double)>& f,
                     const Potential& pot, const HalfDomain& h,
                     const QuadOptions& qopt, long* evals) {
  auto g = [&](double t) { return 2.0 * t * f(h.endpoint - h.dir * t * t); };
  auto r = integrate_adaptive(g, 0.0, h.t_max, qopt, mapped_splits(pot, h));
  if (evals) *evals += r.evaluations;
  return r.value;
}

struct Totals {
  double wkb = 0.0;
  double sub = 0.0;  // signed contribution (adds to wkb)
  double cauchy = 0.0;
};

Totals integrate_condition(const Potential& pot, const SpinorSource& src,
                           double angle, const QuantizationOptions& opt,
                           const TurningPoints& tp) {
  const double eps = src.epsilon();
  const double width = tp.width();
  const double nudge_l = opt.endpoint_nudge * (1.0 + std::fabs(tp.left));
  const double nudge_r = opt.endpoint_nudge * (1.0 + std::fabs(tp.right));
  const double lo = tp.left + nudge_l;
  const double hi = tp.right - nudge_r;
  double seam = src.seam();
  seam = std::min(std::max(seam, lo + 0.05 * width), hi - 0.05 * width);

  const HalfDomain left{lo, seam, -1.0, std::sqrt(seam - lo)};
  const HalfDomain right{hi, seam, +1.0, std::sqrt(hi - seam)};

  auto wkb_f = [&](double xi) {
    return std::sqrt(std::max(kappa_sq(pot, eps, xi), 0.0));
  };
  auto sub_f = [&](double xi) {
    return rep_integrand(pot, eps, xi, src.eval(xi), angle);
  };

  QuadOptions qopt;
  qopt.abs_tol = opt.quad_tol;
  qopt.max_depth = opt.max_depth;

  Totals t;
  t.wkb = half_integral(wkb_f, pot, left, qopt, nullptr) +
          half_integral(wkb_f, pot, right, qopt, nullptr);
  t.sub = half_integral(sub_f, pot, left, qopt, nullptr) +
          half_integral(sub_f, pot, right, qopt, nullptr);

  // Cauchy integrability check: halving the endpoint exclusion must move
  // the sub-wave integral by less than the quadrature tolerance.
  const double t_eta = std::sqrt(opt.exclusion);
  const double t_eta_half = std::sqrt(0.5 * opt.exclusion);
  QuadOptions tiny;
  tiny.abs_tol = 1e-14;
  tiny.max_depth = 12;
  auto sliver = [&](const HalfDomain& h) {
    auto g = [&](double u) { return 2.0 * u * sub_f(h.endpoint - h.dir * u * u); };
    return integrate_adaptive(g, t_eta_half, t_eta, tiny).value;
  };
  t.cauchy = std::fabs(sliver(left)) + std::fabs(sliver(right));
  return t;
}

QuantizationReport assemble(const Potential& pot, const SpinorSource& src,
                            int level, double angle,
                            const QuantizationOptions& opt) {
  const double eps = src.epsilon();
  const auto tp = find_turning_points(pot, eps);
  for (double edge : {tp.left, tp.right}) {
    if (std::fabs(pot.derivative(edge)) < opt.flat_turning_tol) {
      std::ostringstream msg;
      msg << "flat effective turning point at xi = " << edge
          << " (|dtheta/dxi| < " << opt.flat_turning_tol
          << "); quantization integral not supported there";
      throw DomainError(msg.str());
    }
  }

  const Totals t = integrate_condition(pot, src, angle, opt, tp);
  QuantizationReport rep;
  rep.epsilon = eps;
  rep.turning_points = tp;
  rep.wkb_integral = t.wkb;
  rep.subwave_integral = t.sub;
  rep.endpoint_cauchy_gap = t.cauchy;
  const double total = t.wkb + t.sub;
  rep.total_over_pi = total / kPi;
  rep.nearest_level = static_cast<int>(std::lround(rep.total_over_pi)) - 1;
  rep.level = level >= 0 ? level : rep.nearest_level;
  rep.residual = total - (rep.level + 1) * kPi;
  return rep;
}

}  // namespace

IntegrandSample subwave_integrand(const Potential& pot, double eps, double xi,
                                  const Spinor& y) {
  IntegrandSample out;
  const double k2 = kappa_sq(pot, eps, xi);
  constexpr double kKappaCutoff = 1e-8;
  if (k2 <= kKappaCutoff * kKappaCutoff) {
    out.endpoint_regime = true;
    return out;
  }
  // op convention: + P lambda' / (P^2 + lambda^2)
  out.value = -rep_integrand(pot, eps, xi, y, 0.0);
  return out;
}

double subwave_integrand_ratio(const Potential& pot, double eps, double xi,
                               double p_ratio) {
  const double theta = pot.value(xi);
  const double dtheta = pot.derivative(xi);
  const double a = eps + theta + 1.0;
  const double lam2 = (eps - theta - 1.0) / a;
  if (!(lam2 > 0.0))
    throw DomainError("ratio-form integrand outside the allowed region");
  const double lam = std::sqrt(lam2);
  const double dlam = -eps * dtheta / (lam * a * a);
  return p_ratio * dlam / (p_ratio * p_ratio + lam2);
}

QuantizationReport evaluate_quantization(const Potential& pot,
                                         const SpinorSource& src, int level,
                                         const QuantizationOptions& opt) {
  return assemble(pot, src, level, 0.0, opt);
}

QuantizationReport jackiw_rebbi_form(const Potential& pot,
                                     const SpinorSource& src, int level,
                                     double angle,
                                     const QuantizationOptions& opt) {
  return assemble(pot, src, level, angle, opt);
}

namespace {

class SwappedSource final : public SpinorSource {
 public:
  explicit SwappedSource(const SpinorSource& base) : base_(&base) {}
  double epsilon() const override { return -base_->epsilon(); }
  double seam() const override { return base_->seam(); }
  Spinor eval(double xi) const override {
    const Spinor y = base_->eval(xi);
    return {y.psi2, y.psi1};  // sigma_x Psi
  }

 private:
  const SpinorSource* base_;
};

}  // namespace

NegativeEnergyReport negative_energy_check(const Potential& pot,
                                           const EigenSolution& sol,
                                           const QuantizationOptions& opt) {
  NegativeEnergyReport rep;
  const int n = sol.quantum_number;
  rep.total_positive =
      evaluate_quantization(pot, sol.state, n, opt).total();
  SwappedSource mirrored(sol.state);
  rep.total_negative = evaluate_quantization(pot, mirrored, n, opt).total();
  rep.difference = rep.total_negative - rep.total_positive;
  return rep;
}

namespace {

// SpinorSource view of a dimensionless source reparametrized to physical x.
class PhysicalView {
 public:
  PhysicalView(const Units& u, const SpinorSource& src)
      : len_(u.length_scale()), src_(&src) {}
  Spinor eval(double x) const { return src_->eval(x / len_); }
  double len() const { return len_; }

 private:
  double len_;
  const SpinorSource* src_;
};

}  // namespace

QuantizationReport evaluate_quantization_physical(
    const Units& units, const Potential& pot, const SpinorSource& src,
    int level, const QuantizationOptions& opt) {
  units.validate();
  const double eps = src.epsilon();
  const double energy = to_energy(units, eps);
  const double mc2 = units.energy_scale();
  const double hbar_c = units.hbar * units.light_speed;
  const double len = units.length_scale();

  const auto tp_xi = find_turning_points(pot, eps);
  const double xl = tp_xi.left * len, xr = tp_xi.right * len;
  PhysicalView psi(units, src);

  auto v_of = [&](double x) { return mc2 * pot.value(x / len); };
  auto dv_of = [&](double x) { return mc2 * pot.derivative(x / len) / len; };

  auto k_of = [&](double x) {
    const double w = mc2 + v_of(x);
    return std::sqrt(std::max(energy * energy - w * w, 0.0));
  };
  auto wkb_f = [&](double x) { return k_of(x) / hbar_c; };
  auto sub_f = [&](double x) {
    const double kk = k_of(x);
    if (!(kk > 0.0)) return 0.0;
    const Spinor y = psi.eval(x);
    const double a = (mc2 + v_of(x) + energy) / hbar_c;
    const double b = (mc2 + v_of(x) - energy) / hbar_c;
    const double w_x = a * y.psi2 * y.psi2 - b * y.psi1 * y.psi1;
    return -energy * dv_of(x) * y.psi1 * y.psi2 / (kk * w_x * hbar_c);
  };

  const double nudge = opt.endpoint_nudge * (1.0 + std::fabs(xr) + std::fabs(xl));
  const double lo = xl + nudge, hi = xr - nudge;
  const double seam = 0.5 * (lo + hi);

  QuadOptions qopt;
  qopt.abs_tol = opt.quad_tol;
  qopt.max_depth = opt.max_depth;
  std::vector<double> splits;
  for (double b : pot.breakpoints()) splits.push_back(b * len);

  auto half = [&](const std::function<double(double)>& f, double endpoint,
                  double inner, double dir) {
    auto g = [&](double t) { return 2.0 * t * f(endpoint - dir * t * t); };
    std::vector<double> ts;
    for (double s : splits) {
      const double a2 = std::min(endpoint, inner), b2 = std::max(endpoint, inner);
      if (s > a2 && s < b2) ts.push_back(std::sqrt(dir * (endpoint - s)));
    }
    return integrate_adaptive(g, 0.0, std::sqrt(dir * (endpoint - inner)),
                              qopt, ts)
        .value;
  };

  QuantizationReport rep;
  rep.epsilon = eps;
  rep.turning_points = tp_xi;
  rep.wkb_integral = half(wkb_f, lo, seam, -1.0) + half(wkb_f, hi, seam, 1.0);
  rep.subwave_integral =
      half(sub_f, lo, seam, -1.0) + half(sub_f, hi, seam, 1.0);
  const double total = rep.wkb_integral + rep.subwave_integral;
  rep.total_over_pi = total / kPi;
  rep.nearest_level = static_cast<int>(std::lround(rep.total_over_pi)) - 1;
  rep.level = level >= 0 ? level : rep.nearest_level;
  rep.residual = total - (rep.level + 1) * kPi;
  return rep;
}

std::vector<SolvedLevel> solve_levels(const Potential& pot,
                                      std::span<const int> n_list,
                                      double eps_lo, double eps_hi,
                                      const SolveOptions& opt) {
  if (!(eps_hi > eps_lo)) throw DomainError("solve_levels: empty bracket");
  const double bottom = 1.0 + pot.minimum().second;

  auto total_at = [&](double eps) -> double {
    const TwoSidedSpinor state = trial_state(pot, eps, opt.shoot);
    return evaluate_quantization(pot, state, -1, opt.quad).total();
  };

  const int n_scan = std::max(opt.scan_points, 16);
  std::vector<double> grid(n_scan + 1), totals(n_scan + 1);
  for (int i = 0; i <= n_scan; ++i) {
    grid[i] = eps_lo + (eps_hi - eps_lo) * i / n_scan;
    totals[i] = (std::fabs(grid[i]) > bottom + 1e-12)
                    ? total_at(grid[i])
                    : std::numeric_limits<double>::quiet_NaN();
  }

  std::vector<SolvedLevel> out;
  for (int n : n_list) {
    const double target = (n + 1) * kPi;
    double root = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < n_scan; ++i) {
      if (!std::isfinite(totals[i]) || !std::isfinite(totals[i + 1])) continue;
      if ((totals[i] - target) * (totals[i + 1] - target) <= 0.0) {
        root = refine_root([&](double e) { return total_at(e) - target; },
                           grid[i], grid[i + 1], opt.eps_tol);
        break;
      }
    }
    if (!std::isfinite(root)) {
      std::ostringstream msg;
      msg << "solve_levels: no bracket for level n = " << n
          << " inside the scanned window";
      throw BracketError(msg.str());
    }
    SolvedLevel lvl;
    lvl.n = n;
    lvl.epsilon = root;
    lvl.report =
        evaluate_quantization(pot, trial_state(pot, root, opt.shoot), n,
                              opt.quad);
    out.push_back(lvl);
  }
  return out;
}

}  // namespace dirac1d
