#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace apsheat {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Base for every failure this library raises on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An eigenvalue of the boundary operator sits within tolerance of the
// imaginary axis; the positive spectral projector is undefined there.
struct ImaginaryAxisEigenvalue : Error {
  using Error::Error;
};

// Matrix sign iteration failed to converge.
struct NonConvergence : Error {
  using Error::Error;
};

// Ghost-node elimination system is rank deficient: the requested boundary
// conditions do not determine the boundary values.
struct SingularConstraint : Error {
  using Error::Error;
};

// Least-squares design matrix condition number exceeded the configured bound.
struct IllConditioned : Error {
  using Error::Error;
};

// A field violates the boundary condition required by the operation.
struct BoundaryIncompatible : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Configuration file errors carry the offending path and line.
struct ConfigError : Error {
  std::string path;
  int line = 0;
  ConfigError(std::string p, int ln, const std::string& msg)
      : Error(p + ":" + std::to_string(ln) + ": " + msg), path(std::move(p)), line(ln) {}
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace apsheat
