#include "semishell/compression.hpp"

namespace semishell {

namespace {

void require_ambient(const PositiveContext& ctx, const ComplexMatrix& t, const char* who) {
  if (t.rows() != ctx.n || t.cols() != ctx.n)
    throw DimensionMismatchError(std::string(who) + ": operator must be " +
                                 std::to_string(ctx.n) + "x" + std::to_string(ctx.n));
}

double residual_scale(const PositiveContext& ctx, const ComplexMatrix& t) {
  return 1.0 + ctx.norm_a * spectral_norm(t);
}

}  // namespace

double a_bounded_residual(const PositiveContext& ctx, const ComplexMatrix& t) {
  require_ambient(ctx, t, "check_a_bounded");
  if (ctx.rank == ctx.n) return 0.0;
  return max_abs(ctx.A * t * ctx.Z) / residual_scale(ctx, t);
}

bool check_a_bounded(const PositiveContext& ctx, const ComplexMatrix& t) {
  return a_bounded_residual(ctx, t) <= 1e-10;
}

double a_adjointable_residual(const PositiveContext& ctx, const ComplexMatrix& t) {
  require_ambient(ctx, t, "check_a_adjointable");
  const ComplexMatrix residual =
      (ComplexMatrix::Identity(ctx.n, ctx.n) - ctx.projA) * t.adjoint() * ctx.A;
  return max_abs(residual) / residual_scale(ctx, t);
}

bool check_a_adjointable(const PositiveContext& ctx, const ComplexMatrix& t) {
  return a_adjointable_residual(ctx, t) <= 1e-10;
}

CompressedOperator compress(const PositiveContext& ctx, const ComplexMatrix& t) {
  if (!check_a_bounded(ctx, t))
    throw NotABoundedError("compress: T does not map null(A) into null(A)");
  CompressedOperator op;
  op.r = ctx.rank;
  op.M = ctx.sqrt_sigma.asDiagonal() * (ctx.V.adjoint() * t * ctx.V) *
         ctx.inv_sqrt_sigma.asDiagonal();
  op.sourceBounded = true;
  return op;
}

ComplexMatrix lift(const PositiveContext& ctx, const ComplexMatrix& m) {
  if (m.rows() != ctx.rank || m.cols() != ctx.rank)
    throw DimensionMismatchError("lift: expected an r x r matrix with r = " +
                                 std::to_string(ctx.rank));
  return ctx.V * ctx.inv_sqrt_sigma.asDiagonal() * m * ctx.sqrt_sigma.asDiagonal() *
         ctx.V.adjoint();
}

ComplexVector coords(const PositiveContext& ctx, const ComplexVector& u) {
  if (u.size() != ctx.n)
    throw DimensionMismatchError("coords: vector must have length " + std::to_string(ctx.n));
  return ctx.inv_sqrt_sigma.asDiagonal() * (ctx.V.adjoint() * u);
}

ComplexVector witness_from_coords(const PositiveContext& ctx, const ComplexVector& c) {
  if (c.size() != ctx.rank)
    throw DimensionMismatchError("witness_from_coords: vector must have length " +
                                 std::to_string(ctx.rank));
  return ctx.V * (ctx.inv_sqrt_sigma.asDiagonal() * c);
}

ComplexMatrix sharp(const PositiveContext& ctx, const ComplexMatrix& t) {
  if (!check_a_adjointable(ctx, t))
    throw NotAAdjointableError("sharp: range(T^* A) is not contained in range(A)");
  return ctx.pinvA * t.adjoint() * ctx.A;
}

double op_seminorm(const PositiveContext& ctx, const ComplexMatrix& t) {
  if (!check_a_bounded(ctx, t)) return kInf;
  return spectral_norm(compress(ctx, t).M);
}

}  // namespace semishell
