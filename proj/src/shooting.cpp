#include "dirac1d/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dirac1d/errors.hpp"
#include "dirac1d/io_format.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

namespace {

struct DiracRhs {
  const Potential* pot;
  double eps;
  OdeVec<2> operator()(double xi, const OdeVec<2>& y) const {
    const double theta = pot->value(xi);
    return {(1.0 + theta + eps) * y[1], (1.0 + theta - eps) * y[0]};
  }
};

double gamma_rate(const Potential& pot, double eps, double xi) {
  const double w = 1.0 + pot.value(xi);
  return std::sqrt(std::max(w * w - eps * eps, 0.0));
}

// Newton coefficients of the two-point quintic with matched value, first
// and second derivative; p(u,v) = c0 + u(c1 + u(c2 + u(c3 + v(c4 + v c5))))
// with u = t - t0, v = t - t1.
void quintic_coeffs(double h, double y0, double d0, double s0, double y1,
                    double d1, double s1, double c[6]) {
  const double sec = (y1 - y0) / h;
  const double d12 = (sec - d0) / h;
  const double d22 = (d1 - sec) / h;
  c[0] = y0;
  c[1] = d0;
  c[2] = 0.5 * s0;
  c[3] = (d12 - c[2]) / h;
  const double d13 = (d22 - d12) / h;
  const double d23 = (0.5 * s1 - d22) / h;
  c[4] = (d13 - c[3]) / h;
  c[5] = ((d23 - d13) / h - c[4]) / h;
}

double quintic_eval(const double c[6], double u, double v) {
  return c[0] + u * (c[1] + u * (c[2] + u * (c[3] + v * (c[4] + v * c[5]))));
}

double quintic_deriv(const double c[6], double u, double v) {
  const double u2 = u * u;
  return c[1] + 2.0 * c[2] * u + 3.0 * c[3] * u2 +
         c[4] * (3.0 * u2 * v + u2 * u) +
         c[5] * (3.0 * u2 * v * v + 2.0 * u2 * u * v);
}

constexpr double kGl5X[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                             0.5384693101056831, 0.9061798459386640};
constexpr double kGl5W[5] = {0.2369268850561891, 0.4786286704993665,
                             0.5688888888888889, 0.4786286704993665,
                             0.2369268850561891};

}  // namespace

SpinorTrack::SpinorTrack(const Potential& pot, double eps,
                         std::vector<OdeNode<2>> nodes) {
  if (nodes.size() < 2) throw Error("spinor track: need at least two nodes");
  if (nodes.front().t > nodes.back().t)
    std::reverse(nodes.begin(), nodes.end());

  const std::size_t n = nodes.size();
  xi_.resize(n);
  y_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    xi_[i] = nodes[i].t;
    y_[i] = {nodes[i].y[0], nodes[i].y[1]};
  }
  q1_.resize(n - 1);
  q2_.resize(n - 1);
  auto second = [&](std::size_t i, int side, double& s1, double& s2) {
    const double theta = pot.value(xi_[i]);
    const double dtheta = pot.derivative(xi_[i], side);
    const double a = 1.0 + theta + eps;
    const double b = 1.0 + theta - eps;
    s1 = dtheta * y_[i].psi2 + a * b * y_[i].psi1;
    s2 = dtheta * y_[i].psi1 + b * a * y_[i].psi2;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = xi_[i + 1] - xi_[i];
    double s1l, s2l, s1r, s2r;
    second(i, +1, s1l, s2l);
    second(i + 1, -1, s1r, s2r);
    quintic_coeffs(h, y_[i].psi1, nodes[i].dy[0], s1l, y_[i + 1].psi1,
                   nodes[i + 1].dy[0], s1r, q1_[i].c);
    quintic_coeffs(h, y_[i].psi2, nodes[i].dy[1], s2l, y_[i + 1].psi2,
                   nodes[i + 1].dy[1], s2r, q2_[i].c);
  }
}

Spinor SpinorTrack::eval(double xi) const {
  auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  std::size_t i = (it == xi_.begin()) ? 0 : (it - xi_.begin()) - 1;
  i = std::min(i, xi_.size() - 2);
  const double u = xi - xi_[i];
  const double v = xi - xi_[i + 1];
  return {quintic_eval(q1_[i].c, u, v), quintic_eval(q2_[i].c, u, v)};
}

Spinor SpinorTrack::derivative(double xi) const {
  auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  std::size_t i = (it == xi_.begin()) ? 0 : (it - xi_.begin()) - 1;
  i = std::min(i, xi_.size() - 2);
  const double u = xi - xi_[i];
  const double v = xi - xi_[i + 1];
  return {quintic_deriv(q1_[i].c, u, v), quintic_deriv(q2_[i].c, u, v)};
}

double SpinorTrack::norm_squared() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xi_.size(); ++i) {
    const double h = xi_[i + 1] - xi_[i];
    double acc = 0.0;
    for (int g = 0; g < 5; ++g) {
      const double t = xi_[i] + 0.5 * h * (1.0 + kGl5X[g]);
      const double u = t - xi_[i];
      const double v = t - xi_[i + 1];
      const double p1 = quintic_eval(q1_[i].c, u, v);
      const double p2 = quintic_eval(q2_[i].c, u, v);
      acc += kGl5W[g] * (p1 * p1 + p2 * p2);
    }
    total += 0.5 * h * acc;
  }
  return total;
}

double SpinorTrack::max_amplitude() const {
  double m = 0.0;
  for (const auto& s : y_)
    m = std::max({m, std::fabs(s.psi1), std::fabs(s.psi2)});
  return m;
}

SpinorTrack integrate(const Potential& pot, double eps, double from,
                      double to, Spinor initial, double tol) {
  if (from == to) throw DomainError("integrate: empty interval");
  if (initial.psi1 == 0.0 && initial.psi2 == 0.0)
    throw DomainError("integrate: initial spinor must be nonzero");
  OdeOptions opt;
  opt.tol = tol;
  auto nodes = integrate_ode<2>(DiracRhs{&pot, eps}, from, to,
                                {initial.psi1, initial.psi2}, opt,
                                pot.breakpoints());
  return SpinorTrack(pot, eps, std::move(nodes));
}

double asymptotic_decaying_ratio(const Potential& pot, double eps, Side side,
                                 double xi_far) {
  const double w = 1.0 + pot.value(xi_far);
  if (!(w > std::fabs(eps)))
    throw DomainError(
        "asymptotic ratio: point is not in the forbidden region");
  const double gamma = std::sqrt(w * w - eps * eps);
  const double a = w + eps;
  return side == Side::right ? gamma / a : -gamma / a;
}

double far_field_point(const Potential& pot, double eps,
                       const TurningPoints& tp, Side side, double action) {
  const double dir = (side == Side::right) ? 1.0 : -1.0;
  double x = (side == Side::right) ? tp.right : tp.left;
  const double base = std::max(tp.width() / 8.0, 1e-3 * (1.0 + std::fabs(x)));
  double acc = 0.0;
  for (int it = 0; it < 100000; ++it) {
    const double g0 = gamma_rate(pot, eps, x);
    double h = base;
    if (g0 > 0.0) h = std::min(h, 2.0 / g0);
    const double x1 = x + dir * h;
    const double g1 = gamma_rate(pot, eps, x1);
    acc += 0.5 * h * (g0 + g1);
    x = x1;
    if (acc >= action) return x;
  }
  throw ConstraintViolationError(
      "far field: potential does not confine (decay action never reached)");
}

namespace {

struct SideRun {
  std::vector<OdeNode<2>> nodes;  // raw, in integration order
  Spinor at_seam;
};

SideRun run_side(const Potential& pot, double eps, Side side, double seam,
                 const TurningPoints& tp, const ShootingOptions& opt) {
  const double far = far_field_point(pot, eps, tp, side, opt.tail_action);
  const double p = asymptotic_decaying_ratio(pot, eps, side, far);
  OdeOptions oopt;
  oopt.tol = opt.ode_tol;
  SideRun run;
  run.nodes = integrate_ode<2>(DiracRhs{&pot, eps}, far, seam, {1.0, -p},
                               oopt, pot.breakpoints());
  const auto& last = run.nodes.back();
  run.at_seam = {last.y[0], last.y[1]};
  return run;
}

}  // namespace

double shooting_mismatch(const Potential& pot, double eps,
                         const ShootingOptions& opt) {
  const auto tp = find_turning_points(pot, eps);
  const double seam = pot.minimum().first;
  const auto left = run_side(pot, eps, Side::left, seam, tp, opt);
  const auto right = run_side(pot, eps, Side::right, seam, tp, opt);
  const double w = left.at_seam.psi1 * right.at_seam.psi2 -
                   left.at_seam.psi2 * right.at_seam.psi1;
  return w / (left.at_seam.norm() * right.at_seam.norm());
}

TwoSidedSpinor::TwoSidedSpinor(SpinorTrack left, SpinorTrack right,
                               double seam, double eps, double left_scale,
                               double right_scale)
    : left_(std::move(left)),
      right_(std::move(right)),
      seam_(seam),
      eps_(eps),
      left_scale_(left_scale),
      right_scale_(right_scale) {}

Spinor TwoSidedSpinor::eval(double xi) const {
  if (xi <= seam_) {
    const Spinor s = left_.eval(xi);
    return {left_scale_ * s.psi1, left_scale_ * s.psi2};
  }
  const Spinor s = right_.eval(xi);
  return {right_scale_ * s.psi1, right_scale_ * s.psi2};
}

Spinor TwoSidedSpinor::derivative(double xi) const {
  if (xi <= seam_) {
    const Spinor s = left_.derivative(xi);
    return {left_scale_ * s.psi1, left_scale_ * s.psi2};
  }
  const Spinor s = right_.derivative(xi);
  return {right_scale_ * s.psi1, right_scale_ * s.psi2};
}

TwoSidedSpinor trial_state(const Potential& pot, double eps,
                           const ShootingOptions& opt) {
  const auto tp = find_turning_points(pot, eps);
  const double seam = pot.minimum().first;
  auto left = run_side(pot, eps, Side::left, seam, tp, opt);
  auto right = run_side(pot, eps, Side::right, seam, tp, opt);
  return TwoSidedSpinor(SpinorTrack(pot, eps, std::move(left.nodes)),
                        SpinorTrack(pot, eps, std::move(right.nodes)), seam,
                        eps);
}

namespace {

std::vector<double> component_nodes(const TwoSidedSpinor& state, double a,
                                    double b, int component, int n_scan) {
  auto comp = [&](double xi) {
    const Spinor s = state.eval(xi);
    return component == 1 ? s.psi1 : s.psi2;
  };
  std::vector<double> out;
  for (const auto& [lo, hi] : scan_brackets(comp, a, b, n_scan)) {
    out.push_back(refine_root(comp, lo, hi, 1e-13 * (1.0 + std::fabs(hi))));
  }
  return out;
}

EigenSolution build_solution(const Potential& pot, double eps,
                             const ShootingOptions& opt) {
  const auto tp = find_turning_points(pot, eps);
  const double seam = pot.minimum().first;
  auto lrun = run_side(pot, eps, Side::left, seam, tp, opt);
  auto rrun = run_side(pot, eps, Side::right, seam, tp, opt);

  // relative scale that joins the right branch onto the left one
  const Spinor yl = lrun.at_seam, yr = rrun.at_seam;
  const double s =
      (yl.psi1 * yr.psi1 + yl.psi2 * yr.psi2) /
      (yr.psi1 * yr.psi1 + yr.psi2 * yr.psi2);

  SpinorTrack ltrack(pot, eps, std::move(lrun.nodes));
  SpinorTrack rtrack(pot, eps, std::move(rrun.nodes));
  const double total = ltrack.norm_squared() + s * s * rtrack.norm_squared();
  const double k = 1.0 / std::sqrt(total);

  EigenSolution sol;
  sol.epsilon = eps;
  sol.turning_points = tp;
  sol.state = TwoSidedSpinor(std::move(ltrack), std::move(rtrack), seam, eps,
                             k, k * s);

  const auto& lg = sol.state.left_track().grid();
  const auto& rg = sol.state.right_track().grid();
  for (double x : lg) {
    const Spinor y = sol.state.eval(x);
    sol.mesh.xi.push_back(x);
    sol.mesh.psi1.push_back(y.psi1);
    sol.mesh.psi2.push_back(y.psi2);
  }
  for (double x : rg) {
    if (x <= seam) continue;
    const Spinor y = sol.state.eval(x);
    sol.mesh.xi.push_back(x);
    sol.mesh.psi1.push_back(y.psi1);
    sol.mesh.psi2.push_back(y.psi2);
  }
  sol.mesh.epsilon = eps;

  const double pad = 1e-9 * tp.width();
  sol.mesh.node_count_psi1 = static_cast<int>(
      component_nodes(sol.state, tp.left + pad, tp.right - pad, 1, 4096)
          .size());
  sol.mesh.node_count_psi2 = static_cast<int>(
      component_nodes(sol.state, tp.left + pad, tp.right - pad, 2, 4096)
          .size());
  sol.quantum_number = sol.mesh.node_count_psi1;
  return sol;
}

}  // namespace

std::vector<EigenSolution> find_eigenvalues(const Potential& pot,
                                            double eps_lo, double eps_hi,
                                            int max_states,
                                            const ShootingOptions& opt) {
  if (!pot.admissible())
    throw ConstraintViolationError("find_eigenvalues: inadmissible well");
  if (!(eps_hi > eps_lo))
    throw DomainError("find_eigenvalues: empty window");
  const double bottom = 1.0 + pot.minimum().second;

  auto defect = [&](double eps) -> double {
    if (!(std::fabs(eps) > bottom * (1.0 + 1e-14) + 1e-14))
      return std::numeric_limits<double>::quiet_NaN();
    return shooting_mismatch(pot, eps, opt);
  };

  const int n = std::max(opt.scan_points, 8 * std::max(max_states, 1));
  std::vector<EigenSolution> out;
  double xa = eps_lo, fa = defect(eps_lo);
  for (int i = 1; i <= n; ++i) {
    const double xb = eps_lo + (eps_hi - eps_lo) * i / n;
    const double fb = defect(xb);
    if (std::isfinite(fa) && std::isfinite(fb) &&
        (fa == 0.0 || std::signbit(fa) != std::signbit(fb))) {
      const double root =
          refine_root([&](double e) { return shooting_mismatch(pot, e, opt); },
                      xa, xb, opt.eps_tol);
      out.push_back(build_solution(pot, root, opt));
      if (static_cast<int>(out.size()) >= max_states) break;
    }
    xa = xb;
    fa = fb;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.epsilon < b.epsilon; });
  return out;
}

std::vector<EigenSolution> lowest_states(const Potential& pot, int count,
                                         const ShootingOptions& opt) {
  const double bottom = 1.0 + pot.minimum().second;
  double lo = bottom + 1e-6;
  double hi = bottom + 2.0;
  for (int round = 0; round < 8; ++round) {
    auto states = find_eigenvalues(pot, lo, hi, count, opt);
    if (static_cast<int>(states.size()) >= count) return states;
    hi = bottom + (hi - bottom) * 2.0;
  }
  throw BracketError("lowest_states: could not find the requested count");
}

RatioFunction::RatioFunction(const TwoSidedSpinor& src, double pole_rel)
    : src_(&src) {
  const double amp = std::max(src.left_track().max_amplitude(),
                              src.right_track().max_amplitude());
  pole_floor_ = pole_rel * amp;
}

RatioSample RatioFunction::operator()(double xi) const {
  const Spinor y = src_->eval(xi);
  RatioSample r;
  r.at_pole = std::fabs(y.psi1) <= pole_floor_;
  r.value = -y.psi2 / y.psi1;
  return r;
}

InterlaceReport node_interlace_check(const EigenSolution& sol) {
  InterlaceReport rep;
  const auto& tp = sol.turning_points;
  const double pad = 1e-9 * tp.width();
  rep.psi1_nodes =
      component_nodes(sol.state, tp.left + pad, tp.right - pad, 1, 4096);
  rep.psi2_nodes =
      component_nodes(sol.state, tp.left + pad, tp.right - pad, 2, 4096);

  rep.count_ok = std::abs(static_cast<int>(rep.psi1_nodes.size()) -
                          static_cast<int>(rep.psi2_nodes.size())) <= 1;

  std::vector<std::pair<double, int>> merged;
  for (double x : rep.psi1_nodes) merged.emplace_back(x, 1);
  for (double x : rep.psi2_nodes) merged.emplace_back(x, 2);
  std::sort(merged.begin(), merged.end());
  rep.alternating = true;
  for (std::size_t i = 1; i < merged.size(); ++i)
    if (merged[i].second == merged[i - 1].second) rep.alternating = false;

  rep.one_psi2_between_psi1 = true;
  for (std::size_t i = 1; i < rep.psi1_nodes.size(); ++i) {
    int count = 0;
    for (double x : rep.psi2_nodes)
      if (x > rep.psi1_nodes[i - 1] && x < rep.psi1_nodes[i]) ++count;
    if (count != 1) rep.one_psi2_between_psi1 = false;
  }
  return rep;
}

void export_solution(const EigenSolution& sol, const std::string& csv_path,
                     const std::string& json_path,
                     const std::string& header_comment) {
  std::string csv;
  if (!header_comment.empty()) csv += "# " + header_comment + "\n";
  csv += "xi,psi1,psi2\n";
  for (std::size_t i = 0; i < sol.mesh.xi.size(); ++i) {
    csv += join_csv({fmt_number(sol.mesh.xi[i]), fmt_number(sol.mesh.psi1[i]),
                     fmt_number(sol.mesh.psi2[i])});
    csv += '\n';
  }
  write_text_file(csv_path, csv);

  std::string js = "{\n";
  js += "  \"epsilon\": " + fmt_number(sol.epsilon) + ",\n";
  js += "  \"quantum_number\": " + std::to_string(sol.quantum_number) + ",\n";
  js += "  \"node_count_psi1\": " + std::to_string(sol.mesh.node_count_psi1) +
        ",\n";
  js += "  \"node_count_psi2\": " + std::to_string(sol.mesh.node_count_psi2) +
        ",\n";
  js += "  \"turning_points\": {\"left\": " +
        fmt_number(sol.turning_points.left) +
        ", \"right\": " + fmt_number(sol.turning_points.right) + "}\n";
  js += "}\n";
  write_text_file(json_path, js);
}

}  // namespace dirac1d
