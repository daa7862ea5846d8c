#ifndef DIRAC1D_SPECIAL_HPP
#define DIRAC1D_SPECIAL_HPP

namespace dirac1d {

// Lanczos gamma, reflection-extended to negative arguments.
// Throws PoleError at non-positive integers.
double gamma_fn(double z);

// 1/Gamma as an entire function (zero at the poles of Gamma).
double gamma_reciprocal(double z);

// sin(pi z) with exact integer zeros (range-reduced).
double sin_pi(double z);

// Confluent hypergeometric 1F1(a; b; z) by power series, with the Kummer
// transform e^z 1F1(b-a; b; -z) applied for z < 0 to avoid cancellation.
double kummer_1f1(double a, double b, double z);

struct HermiteEval {
  double order = 0.0;
  double argument = 0.0;
  double value = 0.0;
  double derivative = 0.0;  // 2 nu H_{nu-1}(x)
};

// Hermite function of real order,
//   H_nu(x) = 2^nu sqrt(pi) [ 1F1(-nu/2; 1/2; x^2) / Gamma((1-nu)/2)
//             - 2x 1F1((1-nu)/2; 3/2; x^2) / Gamma(-nu/2) ],
// reducing to the Hermite polynomials at integer order.
HermiteEval hermite_nu(double nu, double x);

// H_{nu+1} = 2x H_nu - 2 nu H_{nu-1}
double hermite_recurrence_shift(double nu, double x, double h_nu,
                                double h_nu_minus_1);

}  // namespace dirac1d

#endif
