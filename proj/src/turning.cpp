#include "dirac1d/turning.hpp"

#include <cmath>
#include <sstream>

#include "dirac1d/errors.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

namespace {

constexpr int kScanPoints = 1024;

// [xi_c - W, xi_c + W] grown geometrically until the well walls exceed e.
std::pair<double, double> search_window(const Potential& pot, double e) {
  const double xi_c = pot.minimum().first;
  double w = 1.0;
  for (int it = 0; it < 200; ++it) {
    if (1.0 + pot.value(xi_c - w) > e && 1.0 + pot.value(xi_c + w) > e)
      return {xi_c - w, xi_c + w};
    w *= 2.0;
  }
  throw ConstraintViolationError(
      "turning points: potential does not confine within the search window");
}

std::vector<std::pair<double, double>> root_brackets(const Potential& pot,
                                                     double e) {
  auto [lo, hi] = search_window(pot, e);
  return scan_brackets(
      [&](double xi) { return 1.0 + pot.value(xi) - e; }, lo, hi, kScanPoints);
}

}  // namespace

TurningPoints find_turning_points(const Potential& pot, double eps,
                                  double tol) {
  const double e = std::fabs(eps);
  const auto [xi_c, theta_min] = pot.minimum();
  if (!(e > 1.0 + theta_min))
    throw NoTurningPointsError(
        "no turning points: |eps| does not exceed 1 + min theta");
  if (!pot.admissible())
    throw ConstraintViolationError("potential violates 1 + min theta >= 0");

  auto brackets = root_brackets(pot, e);
  if (brackets.size() != 2) {
    std::ostringstream msg;
    msg << "expected two turning points, found " << brackets.size()
        << " sign changes of 1 + theta - eps";
    throw ConstraintViolationError(msg.str());
  }

  auto f = [&](double xi) { return 1.0 + pot.value(xi) - e; };
  TurningPoints tp;
  tp.left = refine_root(f, brackets[0].first, brackets[0].second, tol);
  tp.right = refine_root(f, brackets[1].first, brackets[1].second, tol);
  if (!(tp.left < xi_c && xi_c < tp.right))
    throw ConstraintViolationError(
        "turning points do not bracket the potential minimum");
  return tp;
}

ConstraintReport validate_constraints(const Potential& pot, double eps_lo,
                                      double eps_hi, int samples) {
  ConstraintReport rep;
  const double theta_min = pot.minimum().second;
  rep.theta_min = theta_min;
  rep.admissible = (1.0 + theta_min >= 0.0);
  if (!rep.admissible) {
    std::ostringstream msg;
    msg << "inadmissible well: 1 + min theta = " << 1.0 + theta_min << " < 0";
    rep.violations.push_back(msg.str());
  }

  rep.two_turning_points = true;
  for (int i = 0; i < samples; ++i) {
    const double eps =
        eps_lo + (eps_hi - eps_lo) * (samples == 1 ? 0.5 : double(i)) /
                     std::max(samples - 1, 1);
    const double e = std::fabs(eps);
    if (!(e > 1.0 + theta_min)) continue;  // below the well: nothing to check
    int count = 0;
    try {
      count = static_cast<int>(root_brackets(pot, e).size());
    } catch (const ConstraintViolationError& err) {
      rep.two_turning_points = false;
      rep.violations.emplace_back(err.what());
      continue;
    }
    rep.worst_root_count = std::max(rep.worst_root_count, count);
    if (count != 2) {
      rep.two_turning_points = false;
      std::ostringstream msg;
      msg << "eps = " << eps << ": found " << count
          << " turning points (need exactly 2)";
      rep.violations.push_back(msg.str());
    }
  }
  return rep;
}

}  // namespace dirac1d
