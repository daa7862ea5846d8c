#include "dirac1d/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dirac1d/errors.hpp"

namespace dirac1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

bool is_nonpositive_integer(double z) {
  return z <= 0.0 && z == std::floor(z);
}

// z >= 0.5 only
double gamma_core(double z) {
  double sum = kLanczosC[0];
  for (int i = 1; i < 15; ++i) sum += kLanczosC[i] / (z + i - 1.0);
  const double t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * sum;
}

}  // namespace

double sin_pi(double z) {
  const double r = z - std::round(z);
  const double s = std::sin(kPi * r);
  const long long n = static_cast<long long>(std::llround(z - r));
  return (n % 2 == 0) ? s : -s;
}

double gamma_fn(double z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "gamma pole at z = " << z;
    throw PoleError(msg.str());
  }
  if (z >= 0.5) return gamma_core(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return kPi / (sin_pi(z) * gamma_core(1.0 - z));
}

double gamma_reciprocal(double z) {
  if (z >= 0.5) return 1.0 / gamma_core(z);
  return sin_pi(z) * gamma_core(1.0 - z) / kPi;
}

double kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw DomainError("1F1: b must not be a non-positive integer");
  if (z < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z);

  double term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    sum += term;
    if (term == 0.0) return sum;  // terminating (polynomial) case
    if (std::fabs(term) <= 1e-15 * std::fabs(sum)) {
      if (++quiet >= 2 && k >= 4) return sum;
    } else {
      quiet = 0;
    }
  }
  std::ostringstream msg;
  msg << "1F1 series did not converge within 10^4 terms (a=" << a
      << ", b=" << b << ", z=" << z << ")";
  throw ConvergenceError(msg.str());
}

namespace {

double hermite_value(double nu, double x) {
  const double z = x * x;
  const double t1 = kummer_1f1(-0.5 * nu, 0.5, z) *
                    gamma_reciprocal(0.5 * (1.0 - nu));
  const double t2 = 2.0 * x * kummer_1f1(0.5 * (1.0 - nu), 1.5, z) *
                    gamma_reciprocal(-0.5 * nu);
  return std::pow(2.0, nu) * kSqrtPi * (t1 - t2);
}

}  // namespace

HermiteEval hermite_nu(double nu, double x) {
  if (nu < -1.0) throw DomainError("hermite_nu: order below -1");
  if (std::fabs(x) > 60.0)
    throw DomainError("hermite_nu: |x| > 60 outside supported domain");
  HermiteEval h;
  h.order = nu;
  h.argument = x;
  h.value = hermite_value(nu, x);
  h.derivative = 2.0 * nu * hermite_value(nu - 1.0, x);
  return h;
}

double hermite_recurrence_shift(double nu, double x, double h_nu,
                                double h_nu_minus_1) {
  return 2.0 * x * h_nu - 2.0 * nu * h_nu_minus_1;
}

}  // namespace dirac1d
