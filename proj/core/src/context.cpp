#include "semishell/context.hpp"

#include "semishell/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace semishell {

PositiveContext build_context(const ComplexMatrix& a, std::optional<double> eps_rank_opt) {
  require_square(a, "build_context");
  if (!all_finite(a)) throw Error("build_context: non-finite entries");
  const EigResult eig = herm_eig(a);  // validates Hermitian-ness

  PositiveContext ctx;
  ctx.n = a.rows();
  ctx.A = a;
  ctx.norm_a = eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  ctx.eps_rank = eps_rank_opt.value_or(static_cast<double>(ctx.n) * ctx.norm_a *
                                       std::pow(2.0, -40));

  if (eig.eigenvalues(0) < -ctx.eps_rank)
    throw NotPositiveError("build_context: A has eigenvalue " +
                           std::to_string(eig.eigenvalues(0)) + " below -eps_rank");

  // Eigenvalues at or below the cutoff are treated as exactly zero.
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < ctx.n; ++i)
    if (eig.eigenvalues(i) > ctx.eps_rank) ++rank;
  if (rank == 0) throw ZeroOperatorError("build_context: A vanishes below the rank cutoff");
  ctx.rank = rank;

  // herm_eig returns ascending order; the context keeps sigma descending.
  // The reordering is stable so that repeated eigenvalues keep the solver's
  // basis order (for A = I this makes V the identity and compress exact).
  std::vector<Eigen::Index> order(ctx.n);
  for (Eigen::Index i = 0; i < ctx.n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return eig.eigenvalues(a) > eig.eigenvalues(b);
  });
  ctx.V.resize(ctx.n, rank);
  ctx.sigma.resize(rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    ctx.V.col(i) = eig.eigenvectors.col(order[i]);
    ctx.sigma(i) = eig.eigenvalues(order[i]);
  }
  ctx.Z.resize(ctx.n, ctx.n - rank);
  for (Eigen::Index i = 0; i < ctx.n - rank; ++i)
    ctx.Z.col(i) = eig.eigenvectors.col(order[rank + i]);

  ctx.sqrt_sigma = ctx.sigma.cwiseSqrt();
  ctx.inv_sqrt_sigma = ctx.sqrt_sigma.cwiseInverse();

  ctx.sqrtA = ctx.V * ctx.sqrt_sigma.asDiagonal() * ctx.V.adjoint();
  ctx.pinvA = ctx.V * ctx.sigma.cwiseInverse().asDiagonal() * ctx.V.adjoint();
  ctx.projA = ctx.V * ctx.V.adjoint();
  return ctx;
}

Complex a_inner(const PositiveContext& ctx, const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != ctx.n || y.size() != ctx.n)
    throw DimensionMismatchError("a_inner: vectors must have length " + std::to_string(ctx.n));
  // y.dot(v) = y^* v, so this is <Ax|y> with the second slot conjugated.
  return y.dot(ctx.A * x);
}

double a_norm_vec(const PositiveContext& ctx, const ComplexVector& x) {
  const Complex v = a_inner(ctx, x, x);
  return std::sqrt(std::max(v.real(), 0.0));
}

std::vector<ComplexVector> sample_a_unit(const PositiveContext& ctx, int count,
                                         std::uint64_t seed, double null_scale) {
  if (count < 1) throw Error("sample_a_unit: count must be >= 1");
  Rng rng(seed);
  std::vector<ComplexVector> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    // Gaussian in range(V), whitened by Sigma^{-1/2} so the induced measure
    // is uniform on the A-unit sphere rather than biased toward the large
    // eigenvalues of A; then ||u||_A = ||g|| exactly.
    ComplexVector g;
    double ng = 0.0;
    do {
      g = rng.cgaussian_vec(ctx.rank);
      ng = g.norm();
    } while (ng < 1e-8);
    ComplexVector x = ctx.V * (ctx.inv_sqrt_sigma.asDiagonal() * (g / ng));
    x /= a_norm_vec(ctx, x);  // second pass keeps the defect at rounding level
    if (ctx.rank < ctx.n) {
      const ComplexVector h = rng.cgaussian_vec(ctx.n - ctx.rank);
      const double t = rng.uniform();
      if (null_scale != 0.0 && h.norm() > 1e-12)
        x += null_scale * t * (ctx.Z * (h / h.norm()));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace semishell
