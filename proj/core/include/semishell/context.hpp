#pragma once

#include "semishell/linalg.hpp"
#include "semishell/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semishell {

// Validated positive semidefinite A together with everything the
// semi-inner-product geometry needs. Immutable after build_context;
// shared concurrent reads are fine.
//
// Convention used throughout: <x|y>_A = <Ax|y> with the SECOND argument
// conjugate-linear, i.e. a_inner(x, y) = y^* A x.
struct PositiveContext {
  Eigen::Index n = 0;     // ambient dimension
  Eigen::Index rank = 0;  // r = rank(A) after the cutoff
  double eps_rank = 0.0;  // cutoff actually used
  double norm_a = 0.0;    // ||A||_2

  ComplexMatrix A;
  ComplexMatrix sqrtA;  // A^{1/2}
  ComplexMatrix pinvA;  // Moore-Penrose A^dagger
  ComplexMatrix projA;  // P_A = V V^*, orthogonal projection onto range(A)
  ComplexMatrix V;      // n x r orthonormal range eigenvectors
  ComplexMatrix Z;      // n x (n-r) orthonormal null-space basis
  RealVector sigma;     // r positive eigenvalues, descending (matches V)

  RealVector sqrt_sigma;      // sigma^{1/2}
  RealVector inv_sqrt_sigma;  // sigma^{-1/2}
};

// Validates A (square, Hermitian within 1e-10, eigenvalues >= -eps_rank,
// not all below the cutoff) and precomputes the fields above.
// Eigenvalues below eps_rank are treated as exactly zero.
// Default cutoff: n * ||A||_2 * 2^-40.
PositiveContext build_context(const ComplexMatrix& a,
                              std::optional<double> eps_rank = std::nullopt);

// <x|y>_A = <Ax|y> = y^* A x. Linear in x, conjugate-linear in y.
Complex a_inner(const PositiveContext& ctx, const ComplexVector& x, const ComplexVector& y);

// ||x||_A = sqrt(<x|x>_A).
double a_norm_vec(const PositiveContext& ctx, const ComplexVector& x);

// Deterministic sample of the A-unit sphere: x = u/||u||_A + null_scale*t*z
// with u complex Gaussian in range(A), z a random unit null direction
// (when rank < n) and t uniform in [0,1]. Every returned x satisfies
// | ||x||_A - 1 | <= 1e-12.
std::vector<ComplexVector> sample_a_unit(const PositiveContext& ctx, int count,
                                         std::uint64_t seed, double null_scale = 1.0);

}  // namespace semishell
