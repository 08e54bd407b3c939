#include "semishell/oracle.hpp"

#include "semishell/rng.hpp"
#include "local_search.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace semishell {

OracleEstimate oracle_estimate(const PositiveContext& ctx, const ComplexMatrix& t,
                               const ComplexMatrix* s, OracleFunctional functional,
                               int samples, std::uint64_t seed,
                               const OracleOptions& options) {
  if (samples < 1) throw Error("oracle_estimate: samples must be >= 1");
  if (t.rows() != ctx.n || t.cols() != ctx.n)
    throw DimensionMismatchError("oracle_estimate: T must match the context dimension");
  const bool pair = functional == OracleFunctional::PairSeminorm ||
                    functional == OracleFunctional::PairRadius;
  if (pair && s == nullptr)
    throw DimensionMismatchError("oracle_estimate: pair functional requires S");
  if (s != nullptr && (s->rows() != ctx.n || s->cols() != ctx.n))
    throw DimensionMismatchError("oracle_estimate: S must match the context dimension");

  // Definition-based evaluation in ambient coordinates; the compressed
  // matrix is never consulted here.
  const auto eval = [&](const ComplexVector& x) -> double {
    const ComplexVector tx = t * x;
    switch (functional) {
      case OracleFunctional::OpNorm:
        return a_norm_vec(ctx, tx);
      case OracleFunctional::Omega:
        return std::abs(a_inner(ctx, tx, x));
      case OracleFunctional::DOmega: {
        const double lam2 = std::norm(a_inner(ctx, tx, x));
        const double mu = std::max(a_inner(ctx, tx, tx).real(), 0.0);
        return std::sqrt(lam2 + mu * mu);
      }
      case OracleFunctional::PairSeminorm:
        return std::abs(a_inner(ctx, tx, (*s) * x));
      case OracleFunctional::PairRadius:
        return std::abs(a_inner(ctx, tx, x) * a_inner(ctx, (*s) * x, x));
    }
    return 0.0;
  };

  OracleEstimate est;
  est.functional = functional;
  est.samples = samples;
  est.seed = seed;

  const auto xs = sample_a_unit(ctx, samples, seed, options.null_scale);
  std::vector<std::pair<double, int>> ranked(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ranked[i] = {eval(xs[i]), static_cast<int>(i)};
  const int keep = std::min<int>(8, static_cast<int>(ranked.size()));
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  est.raw_value = ranked[0].first;
  est.value = ranked[0].first;

  if (options.refine) {
    // Distinct good candidates refine into distinct basins; keeping several
    // is what lets the estimate cross from a strong local maximum to the
    // global one (single-candidate refinement demonstrably stalls).
    for (int k = 0; k < keep; ++k) {
      const auto refined = detail::a_unit_coordinate_search(ctx, xs[ranked[k].second], eval,
                                                            /*maximize=*/true, 200);
      est.value = std::max(est.value, refined.value);
    }
    est.refined = true;
  }
  return est;
}

}  // namespace semishell
