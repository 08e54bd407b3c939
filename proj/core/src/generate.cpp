#include "semishell/generate.hpp"

#include <algorithm>
#include <cmath>

namespace semishell {

ComplexMatrix random_psd(Rng& rng, int n, int zero_eigs) {
  const ComplexMatrix g = rng.cgaussian_mat(n, n);
  ComplexMatrix a = (g.adjoint() * g) / static_cast<double>(n);
  if (zero_eigs > 0) {
    zero_eigs = std::min(zero_eigs, n - 1);  // keep A != 0
    const EigResult eig = herm_eig(a);
    RealVector w = eig.eigenvalues;  // ascending
    for (int i = 0; i < zero_eigs; ++i) w(i) = 0.0;
    a = eig.eigenvectors * w.asDiagonal() * eig.eigenvectors.adjoint();
    a = 0.5 * (a + a.adjoint());
  }
  return a;
}

ComplexMatrix random_matrix(Rng& rng, int n) {
  return rng.cgaussian_mat(n, n) / std::sqrt(static_cast<double>(n));
}

ComplexMatrix random_operator(Rng& rng, const PositiveContext& ctx, OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Unrestricted:
      return random_matrix(rng, ctx.n);
    case OperatorKind::RangeLifted:
      return lift(ctx, random_matrix(rng, ctx.rank));
    case OperatorKind::NullViolating: {
      ComplexMatrix t = random_matrix(rng, ctx.n);
      if (ctx.rank < ctx.n) t += ctx.V.col(0) * ctx.Z.col(0).adjoint();
      return t;
    }
  }
  return random_matrix(rng, ctx.n);
}

ComplexMatrix random_unitary(Rng& rng, int r) {
  const ComplexMatrix g = rng.cgaussian_mat(r, r);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < r; ++j) {
    const Complex d = rr(j, j);
    if (std::abs(d) > 1e-14) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix lifted_unitary(Rng& rng, const PositiveContext& ctx) {
  return lift(ctx, random_unitary(rng, ctx.rank));
}

ComplexMatrix lifted_normaloid(Rng& rng, const PositiveContext& ctx, bool hermitian) {
  const int r = ctx.rank;
  if (hermitian) {
    const ComplexMatrix g = rng.cgaussian_mat(r, r);
    return lift(ctx, ComplexMatrix(0.5 * (g + g.adjoint())));
  }
  // Normal matrix: unitary conjugation of a complex diagonal.
  const ComplexMatrix u = random_unitary(rng, r);
  ComplexVector d(r);
  for (int i = 0; i < r; ++i)
    d(i) = std::polar(0.3 + rng.uniform() * 1.2, 2.0 * M_PI * rng.uniform());
  return lift(ctx, ComplexMatrix(u * d.asDiagonal() * u.adjoint()));
}

ComplexMatrix lifted_jordan(const PositiveContext& ctx) {
  if (ctx.rank < 2) throw Error("lifted_jordan: rank(A) must be >= 2");
  ComplexMatrix j = ComplexMatrix::Zero(ctx.rank, ctx.rank);
  j(0, 1) = 1.0;
  return lift(ctx, j);
}

std::pair<ComplexMatrix, ComplexMatrix> hyponormal_radius_parallel_pair(
    Rng& rng, const PositiveContext& ctx) {
  const int r = ctx.rank;
  const ComplexMatrix u = random_unitary(rng, r);
  // Shared eigenbasis, strictly dominant shared top index: both lifts are
  // A-normal and the common eigenvector attains both A-numerical radii.
  RealVector d1(r), d2(r);
  for (int i = 0; i < r; ++i) {
    d1(i) = (0.2 + 0.8 * rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    d2(i) = (0.2 + 0.8 * rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  }
  const double s1 = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double s2 = rng.uniform() < 0.5 ? -1.0 : 1.0;
  d1(0) = s1 * (d1.cwiseAbs().maxCoeff() + 0.5);
  d2(0) = s2 * (d2.cwiseAbs().maxCoeff() + 0.5);
  const ComplexMatrix m1 = u * d1.cast<Complex>().asDiagonal() * u.adjoint();
  const ComplexMatrix m2 = u * d2.cast<Complex>().asDiagonal() * u.adjoint();
  return {lift(ctx, m1), lift(ctx, m2)};
}

ComplexMatrix null_range_operator(Rng& rng, const PositiveContext& ctx) {
  if (ctx.rank == ctx.n) return ComplexMatrix::Zero(ctx.n, ctx.n);
  return ctx.Z * rng.cgaussian_mat(ctx.n - ctx.rank, ctx.n);
}

}  // namespace semishell
