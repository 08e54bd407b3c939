#pragma once

#include "semishell/context.hpp"

namespace semishell {

// The r x r matrix of the operator induced by T on the Hilbert space
// completion of range(A^{1/2}), expressed in the orthonormal basis
// b_i = A^{1/2} v_i. Closed form: M = Sigma^{1/2} (V^* T V) Sigma^{-1/2}.
struct CompressedOperator {
  Eigen::Index r = 0;
  ComplexMatrix M;
  bool sourceBounded = false;
};

// Scaled residual ||A T Z||_max / (1 + ||A|| ||T||); 0 when A has full rank.
double a_bounded_residual(const PositiveContext& ctx, const ComplexMatrix& t);

// T is A-bounded iff it maps the null space of A into itself
// (residual <= 1e-10).
bool check_a_bounded(const PositiveContext& ctx, const ComplexMatrix& t);

// Scaled residual ||(I - P_A) T^* A||_max / (1 + ||A|| ||T||); the Douglas
// range-inclusion criterion R(T^* A) subset-of R(A) via projector residual.
double a_adjointable_residual(const PositiveContext& ctx, const ComplexMatrix& t);

bool check_a_adjointable(const PositiveContext& ctx, const ComplexMatrix& t);

// Residual within 10x of the decision threshold on either side; such
// instances are flagged as numerically marginal in reports.
inline bool marginal_residual(double residual) {
  return residual > 1e-11 && residual <= 1e-9;
}

// Throws NotABoundedError when T is not A-bounded.
CompressedOperator compress(const PositiveContext& ctx, const ComplexMatrix& t);

// Inverse of compress on its image: lift(ctx, M) is the n x n operator
// V Sigma^{-1/2} M Sigma^{1/2} V^* whose compression is exactly M.
ComplexMatrix lift(const PositiveContext& ctx, const ComplexMatrix& m);

// Coordinates of u in the b_i basis: Sigma^{-1/2} V^* u. For u = A x this
// gives the coordinates of x as an element of range(A^{1/2}), so
// coords(A T x) = M * coords(A x).
ComplexVector coords(const PositiveContext& ctx, const ComplexVector& u);

// A-unit witness for a unit coordinate vector c: x = V Sigma^{-1/2} c.
ComplexVector witness_from_coords(const PositiveContext& ctx, const ComplexVector& c);

// A-adjoint T^# = A^dagger T^* A, the reduced solution of A X = T^* A.
// Throws NotAAdjointableError when R(T^* A) is not contained in R(A).
ComplexMatrix sharp(const PositiveContext& ctx, const ComplexMatrix& t);

// ||T||_A = sup{||Tx||_A : ||x||_A = 1}. Returns +inf (a value, not an
// error) when T is not A-bounded; otherwise the spectral norm of the
// compressed matrix.
double op_seminorm(const PositiveContext& ctx, const ComplexMatrix& t);

}  // namespace semishell
