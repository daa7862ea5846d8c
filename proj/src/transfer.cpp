#include "dirac1d/transfer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dirac1d/errors.hpp"

namespace dirac1d {

namespace {

constexpr double kPi = std::numbers::pi;

double kappa_at(const Potential& pot, double eps, double xi) {
  const double w = 1.0 + pot.value(xi);
  return std::sqrt(std::max(eps * eps - w * w, 0.0));
}

double lambda_at(const Potential& pot, double eps, double xi) {
  const double theta = pot.value(xi);
  const double num = eps - theta - 1.0;
  const double den = eps + theta + 1.0;
  return std::sqrt(std::max(num / den, 0.0));
}

}  // namespace

std::vector<Segment> build_grid(const Potential& pot, const TurningPoints& tp,
                                double eps, int n, TagRule rule) {
  if (n < 2) throw GridError("build_grid: need at least two segments");
  const double width = tp.width() / n;
  std::vector<Segment> grid(n);
  for (int i = 0; i < n; ++i) {
    Segment& s = grid[i];
    s.left = tp.left + i * width;
    s.width = width;
    switch (rule) {
      case TagRule::midpoint: s.tag = s.left + 0.5 * width; break;
      case TagRule::left_edge: s.tag = s.left; break;
      case TagRule::right_edge: s.tag = s.left + width; break;
    }
    s.theta = pot.value(s.tag);
    s.kappa = kappa_at(pot, eps, s.tag);
    s.lambda = lambda_at(pot, eps, s.tag);
  }
  return grid;
}

Mat2 segment_matrix(const Segment& s) {
  if (!(s.lambda > 0.0))
    throw SingularSegmentError(
        "segment touches a turning point (lambda = 0)");
  const double phase = s.kappa * s.width;
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  return {c, -sn / s.lambda, s.lambda * sn, c};
}

Spinor propagate(std::span<const Mat2> matrices, Spinor right_boundary) {
  if (matrices.empty()) throw GridError("propagate: empty matrix list");
  Spinor value = right_boundary;
  for (auto it = matrices.rbegin(); it != matrices.rend(); ++it)
    value = it->apply(value);
  return value;
}

RecurrenceResult recurrence_step(double p_next, const Segment& s) {
  if (!(s.lambda > 0.0))
    throw SingularSegmentError("recurrence_step: lambda = 0");
  const double phi_next = std::atan(p_next / s.lambda);
  const double phi = phi_next - s.kappa * s.width;
  RecurrenceResult r;
  const double c = std::cos(phi);
  // Advancing the angle through +-pi/2 is a psi1 node, not a failure.
  if (std::fabs(c) < 1e-14) {
    r.at_pole = true;
    r.value = s.lambda * std::tan(phi);
    return r;
  }
  r.value = s.lambda * std::tan(phi);
  return r;
}

PhaseSum discrete_phase_sum(std::span<const Segment> grid,
                            std::span<const double> p_sequence) {
  const std::size_t n = grid.size();
  if (p_sequence.size() != n + 1)
    throw GridError("discrete_phase_sum: need |grid|+1 ratio values");
  for (const Segment& s : grid)
    if (!(s.lambda > 0.0))
      throw SingularSegmentError("discrete_phase_sum: lambda = 0 segment");

  PhaseSum ps;
  for (const Segment& s : grid) ps.wkb_term += s.kappa * s.width;
  for (std::size_t i = 1; i < n; ++i) {
    // atan(P_{n+1}/lambda_{n+1}) - atan(P_{n+1}/lambda_n); continuous
    // through P poles since both branches saturate at +-pi/2 together.
    ps.subwave_term += std::atan(p_sequence[i] / grid[i].lambda) -
                       std::atan(p_sequence[i] / grid[i - 1].lambda);
  }
  ps.boundary_left = std::atan(p_sequence.front() / grid.front().lambda);
  ps.boundary_right = std::atan(p_sequence.back() / grid.back().lambda);

  const double lhs = ps.wkb_term + ps.subwave_term;
  const double rhs0 = ps.boundary_right - ps.boundary_left;
  ps.z = std::lround((lhs - rhs0) / kPi);
  ps.identity_residual = lhs - rhs0 - ps.z * kPi;
  return ps;
}

HalfPhaseReport half_phase_limit(
    const Potential& pot, double eps, std::span<const int> n_values,
    const std::function<RatioSample(double)>& ratio, TagRule rule) {
  HalfPhaseReport rep;
  const auto tp = find_turning_points(pot, eps);
  const RatioSample pr = ratio(tp.right);
  const RatioSample pl = ratio(tp.left);
  if (!pr.at_pole && !(pr.value > 0.0)) {
    rep.sign_ok = false;
    rep.message = "P(xi_R) <= 0: not a bound-state ratio";
  }
  if (!pl.at_pole && !(pl.value < 0.0)) {
    rep.sign_ok = false;
    rep.message += rep.message.empty() ? "" : "; ";
    rep.message += "P(xi_L) >= 0: not a bound-state ratio";
  }
  for (int n : n_values) {
    auto grid = build_grid(pot, tp, eps, n, rule);
    BoundaryPhases row;
    row.n = n;
    row.left = std::atan(pl.value / grid.front().lambda);
    row.right = std::atan(pr.value / grid.back().lambda);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace dirac1d
