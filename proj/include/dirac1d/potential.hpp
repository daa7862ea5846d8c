#ifndef DIRAC1D_POTENTIAL_HPP
#define DIRAC1D_POTENTIAL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dirac1d {

// Dimensionless scalar potential theta(xi) of a confining well.
// Admissible wells satisfy 1 + min theta >= 0 and produce exactly two
// effective turning points for every energy above the well bottom.
class Potential {
 public:
  virtual ~Potential() = default;

  virtual double value(double xi) const = 0;

  // side > 0 / < 0 selects the one-sided derivative at a kink;
  // side == 0 uses the kink convention of the concrete well.
  virtual double derivative(double xi, int side = 0) const = 0;

  // (xi_c, theta_min)
  virtual std::pair<double, double> minimum() const = 0;

  // Kink / discontinuity locations; integrators and quadratures split here.
  virtual std::vector<double> breakpoints() const { return {}; }

  virtual std::string kind() const = 0;
  virtual std::vector<double> coefficients() const = 0;
  virtual std::unique_ptr<Potential> clone() const = 0;

  bool admissible() const { return 1.0 + minimum().second >= 0.0; }
};

// theta = a |xi|, a > 0
class LinearWell final : public Potential {
 public:
  explicit LinearWell(double slope);
  double value(double xi) const override;
  double derivative(double xi, int side = 0) const override;
  std::pair<double, double> minimum() const override { return {0.0, 0.0}; }
  std::vector<double> breakpoints() const override { return {0.0}; }
  std::string kind() const override { return "linear"; }
  std::vector<double> coefficients() const override { return {slope_}; }
  std::unique_ptr<Potential> clone() const override {
    return std::make_unique<LinearWell>(slope_);
  }
  double slope() const { return slope_; }

 private:
  double slope_;
};

// theta = b xi^2, b > 0
class QuadraticWell final : public Potential {
 public:
  explicit QuadraticWell(double curvature);
  double value(double xi) const override;
  double derivative(double xi, int side = 0) const override;
  std::pair<double, double> minimum() const override { return {0.0, 0.0}; }
  std::string kind() const override { return "quadratic"; }
  std::vector<double> coefficients() const override { return {curvature_}; }
  std::unique_ptr<Potential> clone() const override {
    return std::make_unique<QuadraticWell>(curvature_);
  }

 private:
  double curvature_;
};

// Flat core |xi| <= w, linear walls beyond: theta = a max(|xi| - w, 0).
// A finite-slope square well; the walls steepen as a grows.
class SquareWell final : public Potential {
 public:
  SquareWell(double half_width, double slope);
  double value(double xi) const override;
  double derivative(double xi, int side = 0) const override;
  std::pair<double, double> minimum() const override { return {0.0, 0.0}; }
  std::vector<double> breakpoints() const override;
  std::string kind() const override { return "square_well"; }
  std::vector<double> coefficients() const override {
    return {half_width_, slope_};
  }
  std::unique_ptr<Potential> clone() const override {
    return std::make_unique<SquareWell>(half_width_, slope_);
  }
  double half_width() const { return half_width_; }
  double slope() const { return slope_; }

 private:
  double half_width_;
  double slope_;
};

// Monotone (Fritsch-Carlson) cubic interpolant through (xi_i, theta_i).
// Extends linearly with the end slopes outside the mesh.
class TabulatedWell final : public Potential {
 public:
  TabulatedWell(std::vector<double> mesh, std::vector<double> values);
  double value(double xi) const override;
  double derivative(double xi, int side = 0) const override;
  std::pair<double, double> minimum() const override;
  std::string kind() const override { return "tabulated"; }
  std::vector<double> coefficients() const override { return {}; }
  std::unique_ptr<Potential> clone() const override {
    return std::make_unique<TabulatedWell>(mesh_, values_);
  }
  const std::vector<double>& mesh() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int cell(double xi) const;
  std::vector<double> mesh_, values_, slopes_;
};

// kind in {linear, quadratic, square_well}; tabulated wells load from CSV.
std::unique_ptr<Potential> make_potential(const std::string& kind,
                                          const std::vector<double>& coeffs);

// Two-column CSV (xi, theta), strictly increasing xi.
std::unique_ptr<Potential> load_tabulated(const std::string& csv_path);

}  // namespace dirac1d

#endif
