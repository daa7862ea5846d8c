#ifndef DIRAC1D_SHOOTING_HPP
#define DIRAC1D_SHOOTING_HPP

#include <string>
#include <vector>

#include "dirac1d/ode.hpp"
#include "dirac1d/potential.hpp"
#include "dirac1d/spinor.hpp"
#include "dirac1d/turning.hpp"

namespace dirac1d {

// Dense solution of the coupled first-order system
//   dpsi1/dxi = (1 + theta + eps) psi2
//   dpsi2/dxi = (1 + theta - eps) psi1
// stored at the accepted steps with a quintic two-point interpolant in
// between (value and first two derivatives match at the step ends).
class SpinorTrack {
 public:
  SpinorTrack() = default;
  SpinorTrack(const Potential& pot, double eps,
              std::vector<OdeNode<2>> nodes);

  Spinor eval(double xi) const;
  Spinor derivative(double xi) const;

  double front() const { return xi_.front(); }
  double back() const { return xi_.back(); }
  const std::vector<double>& grid() const { return xi_; }
  Spinor node_state(std::size_t i) const { return y_[i]; }

  // integral of (psi1^2 + psi2^2), 5-point Gauss per stored interval
  double norm_squared() const;
  double max_amplitude() const;

 private:
  struct Quintic {
    double c[6];
  };
  std::vector<double> xi_;
  std::vector<Spinor> y_;
  std::vector<Quintic> q1_, q2_;  // per-interval coefficients
};

struct ShootingOptions {
  double ode_tol = 1e-12;
  double eps_tol = 1e-12;     // eigenvalue bisection tolerance
  double tail_action = 40.0;  // \int gamma dxi of forbidden-region padding
  int scan_points = 200;      // mismatch sign-scan resolution per window
};

// Raw integrator (initial-value problem) over an arbitrary interval.
SpinorTrack integrate(const Potential& pot, double eps, double from,
                      double to, Spinor initial, double tol = 1e-12);

enum class Side { left, right };

// Decaying-branch ratio P = -psi2/psi1 deep in the forbidden region:
// +gamma/(1+theta+eps) on the right, -gamma/(1+theta+eps) on the left,
// gamma = sqrt((1+theta)^2 - eps^2) at xi_far.
double asymptotic_decaying_ratio(const Potential& pot, double eps, Side side,
                                 double xi_far);

// Point beyond the turning point where \int gamma dxi exceeds `action`.
double far_field_point(const Potential& pot, double eps,
                       const TurningPoints& tp, Side side,
                       double action = 40.0);

// Normalized two-sided matching defect at eps; its zeros are eigenvalues.
double shooting_mismatch(const Potential& pot, double eps,
                         const ShootingOptions& opt = {});

// Left-decaying branch on [far_L, seam], right-decaying on [seam, far_R].
// For an eigenvalue the two branches join smoothly and the per-side scales
// make the merged state continuous and normalized.
class TwoSidedSpinor final : public SpinorSource {
 public:
  TwoSidedSpinor() = default;
  TwoSidedSpinor(SpinorTrack left, SpinorTrack right, double seam,
                 double eps, double left_scale = 1.0,
                 double right_scale = 1.0);

  double epsilon() const override { return eps_; }
  double seam() const override { return seam_; }
  Spinor eval(double xi) const override;
  Spinor derivative(double xi) const;
  double domain_left() const { return left_.front(); }
  double domain_right() const { return right_.back(); }
  const SpinorTrack& left_track() const { return left_; }
  const SpinorTrack& right_track() const { return right_; }

 private:
  SpinorTrack left_, right_;
  double seam_ = 0.0, eps_ = 0.0;
  double left_scale_ = 1.0, right_scale_ = 1.0;
};

// Tabulated samples of a normalized bound state on the merged mesh.
struct SpinorMesh {
  std::vector<double> xi;
  std::vector<double> psi1, psi2;
  double epsilon = 0.0;
  int node_count_psi1 = 0;  // strictly between the turning points
  int node_count_psi2 = 0;
};

struct EigenSolution {
  double epsilon = 0.0;
  int quantum_number = 0;  // = psi1 node count between turning points
  TurningPoints turning_points;
  SpinorMesh mesh;
  TwoSidedSpinor state;
};

// Trial state at arbitrary admissible eps (not necessarily an eigenvalue):
// both branches decay outward but generally disagree at the seam.
TwoSidedSpinor trial_state(const Potential& pot, double eps,
                           const ShootingOptions& opt = {});

std::vector<EigenSolution> find_eigenvalues(const Potential& pot,
                                            double eps_lo, double eps_hi,
                                            int max_states,
                                            const ShootingOptions& opt = {});

// Convenience: grow the window upward from the well bottom until `count`
// positive-energy states are found.
std::vector<EigenSolution> lowest_states(const Potential& pot, int count,
                                         const ShootingOptions& opt = {});

struct RatioSample {
  double value = 0.0;
  bool at_pole = false;
};

// P(xi) = -psi2/psi1 with pole markers at psi1 nodes.
class RatioFunction {
 public:
  explicit RatioFunction(const TwoSidedSpinor& src, double pole_rel = 1e-12);
  RatioSample operator()(double xi) const;

 private:
  const TwoSidedSpinor* src_;
  double pole_floor_;
};

struct InterlaceReport {
  std::vector<double> psi1_nodes;
  std::vector<double> psi2_nodes;
  bool alternating = false;
  bool count_ok = false;  // |#psi1 - #psi2| <= 1
  bool one_psi2_between_psi1 = false;
  bool ok() const { return alternating && count_ok && one_psi2_between_psi1; }
};

InterlaceReport node_interlace_check(const EigenSolution& sol);

// CSV (xi, psi1, psi2) plus a JSON header (eps, n, turning points).
void export_solution(const EigenSolution& sol, const std::string& csv_path,
                     const std::string& json_path,
                     const std::string& header_comment = "");

}  // namespace dirac1d

#endif
