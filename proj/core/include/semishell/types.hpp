#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace semishell {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Everything in this library reports problems as exceptions derived from
// Error; the CLI maps them to exit code 2 with a one-line diagnostic.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSquareError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotPositiveError : Error { using Error::Error; };
struct ZeroOperatorError : Error { using Error::Error; };
struct NotABoundedError : Error { using Error::Error; };
struct NotAAdjointableError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Entrywise max modulus; 0 for an empty matrix.
inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

inline void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw NonSquareError(std::string(who) + ": expected a nonempty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace semishell
