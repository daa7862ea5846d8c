#ifndef DIRAC1D_TRANSFER_HPP
#define DIRAC1D_TRANSFER_HPP

#include <functional>
#include <span>
#include <vector>

#include "dirac1d/potential.hpp"
#include "dirac1d/shooting.hpp"
#include "dirac1d/spinor.hpp"
#include "dirac1d/turning.hpp"

namespace dirac1d {

// One cell of the piecewise-constant approximation between the turning
// points, with the local wavenumber kappa = sqrt(eps^2 - (1+theta)^2) and
// amplitude ratio lambda = sqrt((eps-theta-1)/(eps+theta+1)) frozen at the
// tag point.
struct Segment {
  double left = 0.0;
  double width = 0.0;
  double tag = 0.0;
  double theta = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;
  double right() const { return left + width; }
};

enum class TagRule { midpoint, left_edge, right_edge };

std::vector<Segment> build_grid(const Potential& pot, const TurningPoints& tp,
                                double eps, int n,
                                TagRule rule = TagRule::midpoint);

struct Mat2 {
  double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;
  double det() const { return a11 * a22 - a12 * a21; }
  Spinor apply(const Spinor& s) const {
    return {a11 * s.psi1 + a12 * s.psi2, a21 * s.psi1 + a22 * s.psi2};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
};

// Maps the segment's right-edge spinor to its left edge:
// [[cos(kd), -sin(kd)/lambda], [lambda sin(kd), cos(kd)]], det = 1.
Mat2 segment_matrix(const Segment& s);

// Left boundary value of the ordered product applied to the right boundary.
Spinor propagate(std::span<const Mat2> matrices, Spinor right_boundary);

struct RecurrenceResult {
  double value = 0.0;
  bool at_pole = false;  // psi1 node at the segment's left edge
};

// P_n = lambda_n tan(atan(P_{n+1}/lambda_n) - kappa_n delta_n)
RecurrenceResult recurrence_step(double p_next, const Segment& s);

struct PhaseSum {
  double wkb_term = 0.0;            // sum kappa_n delta_n
  double subwave_term = 0.0;        // sum of the scattered sub-wave phases
  double boundary_left = 0.0;       // atan(P_1 / lambda_1)
  double boundary_right = 0.0;      // atan(P_{N+1} / lambda_N)
  long z = 0;                       // recovered branch count
  double identity_residual = 0.0;   // defect of the finite-N phase identity
};

// p_sequence has N+1 entries (segment-edge ratios); the identity
//   wkb + subwave = z pi + boundary_right - boundary_left
// holds exactly for sequences generated by the recurrence.
PhaseSum discrete_phase_sum(std::span<const Segment> grid,
                            std::span<const double> p_sequence);

struct BoundaryPhases {
  int n = 0;
  double left = 0.0;   // atan(P_1/lambda_1)      -> -pi/2 as N grows
  double right = 0.0;  // atan(P_{N+1}/lambda_N)  -> +pi/2 as N grows
};

struct HalfPhaseReport {
  std::vector<BoundaryPhases> rows;
  bool sign_ok = true;  // P(xi_R) > 0 > P(xi_L) as a bound state requires
  std::string message;
};

// Boundary phase terms for a sequence of grid refinements, with the edge
// ratios supplied by a bound-state P(xi) (pole markers honoured).
HalfPhaseReport half_phase_limit(
    const Potential& pot, double eps, std::span<const int> n_values,
    const std::function<RatioSample(double)>& ratio,
    TagRule rule = TagRule::midpoint);

}  // namespace dirac1d

#endif
