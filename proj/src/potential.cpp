#include "dirac1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dirac1d/errors.hpp"

namespace dirac1d {

LinearWell::LinearWell(double slope) : slope_(slope) {
  if (!(slope > 0.0) || !std::isfinite(slope))
    throw ConstraintViolationError("linear well: slope must be positive");
}

double LinearWell::value(double xi) const { return slope_ * std::fabs(xi); }

double LinearWell::derivative(double xi, int side) const {
  if (xi == 0.0) {
    if (side > 0) return slope_;
    if (side < 0) return -slope_;
    return 0.0;  // sign(0) * a
  }
  return xi > 0.0 ? slope_ : -slope_;
}

QuadraticWell::QuadraticWell(double curvature) : curvature_(curvature) {
  if (!(curvature > 0.0) || !std::isfinite(curvature))
    throw ConstraintViolationError(
        "quadratic well: curvature must be positive");
}

double QuadraticWell::value(double xi) const { return curvature_ * xi * xi; }

double QuadraticWell::derivative(double xi, int) const {
  return 2.0 * curvature_ * xi;
}

SquareWell::SquareWell(double half_width, double slope)
    : half_width_(half_width), slope_(slope) {
  if (!(half_width > 0.0) || !(slope > 0.0))
    throw ConstraintViolationError(
        "square well: half width and slope must be positive");
}

double SquareWell::value(double xi) const {
  return slope_ * std::max(std::fabs(xi) - half_width_, 0.0);
}

double SquareWell::derivative(double xi, int side) const {
  const double a = std::fabs(xi);
  if (a > half_width_) return xi > 0.0 ? slope_ : -slope_;
  if (a < half_width_) return 0.0;
  // on a wall kink
  if (xi > 0.0) return side > 0 ? slope_ : 0.0;
  return side < 0 ? -slope_ : 0.0;
}

std::vector<double> SquareWell::breakpoints() const {
  return {-half_width_, half_width_};
}

TabulatedWell::TabulatedWell(std::vector<double> mesh,
                             std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (mesh_.size() != values_.size() || mesh_.size() < 4)
    throw ConstraintViolationError(
        "tabulated well: need >= 4 matching (xi, theta) samples");
  for (std::size_t i = 1; i < mesh_.size(); ++i)
    if (!(mesh_[i] > mesh_[i - 1]))
      throw ConstraintViolationError(
          "tabulated well: mesh must be strictly increasing");

  // Fritsch-Carlson monotone slopes
  const std::size_t n = mesh_.size();
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = mesh_[i + 1] - mesh_[i];
    d[i] = (values_[i + 1] - values_[i]) / h[i];
  }
  slopes_.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slopes_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0)
      m = 0.0;
    else if (d0 * d1 <= 0.0 && std::fabs(m) > 3.0 * std::fabs(d0))
      m = 3.0 * d0;
    return m;
  };
  slopes_.front() = end_slope(h[0], h[1], d[0], d[1]);
  slopes_.back() = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

int TabulatedWell::cell(double xi) const {
  auto it = std::upper_bound(mesh_.begin(), mesh_.end(), xi);
  int i = static_cast<int>(it - mesh_.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(mesh_.size()) - 2);
}

double TabulatedWell::value(double xi) const {
  if (xi <= mesh_.front())
    return values_.front() + slopes_.front() * (xi - mesh_.front());
  if (xi >= mesh_.back())
    return values_.back() + slopes_.back() * (xi - mesh_.back());
  const int i = cell(xi);
  const double h = mesh_[i + 1] - mesh_[i];
  const double t = (xi - mesh_[i]) / h;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] +
         h11 * h * slopes_[i + 1];
}

double TabulatedWell::derivative(double xi, int) const {
  if (xi <= mesh_.front()) return slopes_.front();
  if (xi >= mesh_.back()) return slopes_.back();
  const int i = cell(xi);
  const double h = mesh_[i + 1] - mesh_[i];
  const double t = (xi - mesh_[i]) / h;
  const double g00 = 6.0 * t * (t - 1.0) / h;
  const double g10 = (1.0 - t) * (1.0 - 3.0 * t);
  const double g01 = -g00;
  const double g11 = t * (3.0 * t - 2.0);
  return g00 * values_[i] + g10 * slopes_[i] + g01 * values_[i + 1] +
         g11 * slopes_[i + 1];
}

std::pair<double, double> TabulatedWell::minimum() const {
  // best mesh node, then refine within the two adjacent cells
  std::size_t k = 0;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[k]) k = i;
  double best_x = mesh_[k], best_v = values_[k];
  const std::size_t lo = (k == 0) ? 0 : k - 1;
  const std::size_t hi = std::min(k + 1, mesh_.size() - 1);
  for (std::size_t i = lo; i < hi; ++i) {
    const double a = mesh_[i], b = mesh_[i + 1];
    for (int j = 1; j < 64; ++j) {
      const double x = a + (b - a) * j / 64.0;
      const double v = value(x);
      if (v < best_v) {
        best_v = v;
        best_x = x;
      }
    }
  }
  // local parabolic polish
  double step = (mesh_.back() - mesh_.front()) / (64.0 * mesh_.size());
  for (int it = 0; it < 60; ++it) {
    for (double x : {best_x - step, best_x + step}) {
      const double v = value(x);
      if (v < best_v) {
        best_v = v;
        best_x = x;
      }
    }
    step *= 0.5;
  }
  return {best_x, best_v};
}

std::unique_ptr<Potential> make_potential(const std::string& kind,
                                          const std::vector<double>& coeffs) {
  if (kind == "linear") {
    if (coeffs.size() != 1)
      throw ConfigError("linear potential takes one coefficient (slope)");
    return std::make_unique<LinearWell>(coeffs[0]);
  }
  if (kind == "quadratic") {
    if (coeffs.size() != 1)
      throw ConfigError("quadratic potential takes one coefficient");
    return std::make_unique<QuadraticWell>(coeffs[0]);
  }
  if (kind == "square_well") {
    if (coeffs.size() != 2)
      throw ConfigError("square_well takes (half_width, slope)");
    return std::make_unique<SquareWell>(coeffs[0], coeffs[1]);
  }
  throw ConfigError("unknown potential kind: " + kind);
}

std::unique_ptr<Potential> load_tabulated(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw ConfigError("cannot open mesh file: " + csv_path);
  std::vector<double> xs, vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream row(line);
    double x, v;
    if (row >> x >> v) {
      xs.push_back(x);
      vs.push_back(v);
    }
  }
  return std::make_unique<TabulatedWell>(std::move(xs), std::move(vs));
}

}  // namespace dirac1d
