#ifndef DIRAC1D_ERRORS_HPP
#define DIRAC1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac1d {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad physical constants (non-positive m, c or hbar).
struct InvalidUnitsError : Error {
  using Error::Error;
};

// Well-shape violations: inadmissible minimum, wrong turning-point count.
struct ConstraintViolationError : Error {
  using Error::Error;
};

// Energy below the bottom of the effective well.
struct NoTurningPointsError : Error {
  using Error::Error;
};

struct GridError : Error {
  using Error::Error;
};

struct SingularSegmentError : Error {
  using Error::Error;
};

// Adaptive ODE step shrank below the representable floor.
struct StiffnessError : Error {
  using Error::Error;
};

struct BracketError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

struct PoleError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dirac1d

#endif
