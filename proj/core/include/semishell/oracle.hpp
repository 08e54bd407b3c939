#pragma once

#include "semishell/context.hpp"

namespace semishell {

// Brute-force estimators for every supremum computed by the kernels.
// Slow, simple, trusted: the definitions are evaluated on sampled A-unit
// vectors in ambient coordinates, never through the compressed matrix, so
// the estimates are independent of the code paths they validate.

enum class OracleFunctional { OpNorm, Omega, DOmega, PairSeminorm, PairRadius };

struct OracleEstimate {
  OracleFunctional functional = OracleFunctional::OpNorm;
  double value = 0.0;      // refined lower bound on the supremum
  double raw_value = 0.0;  // best sampled value before refinement
  int samples = 0;
  bool refined = false;
  std::uint64_t seed = 0;
};

struct OracleOptions {
  bool refine = true;      // 200 sweeps of derivative-free local ascent
  double null_scale = 1.0; // passed to sample_a_unit
};

// S may be null except for the pair functionals. samples >= 1.
OracleEstimate oracle_estimate(const PositiveContext& ctx, const ComplexMatrix& t,
                               const ComplexMatrix* s, OracleFunctional functional,
                               int samples, std::uint64_t seed,
                               const OracleOptions& options = {});

inline OracleEstimate oracle_estimate(const PositiveContext& ctx, const ComplexMatrix& t,
                                      OracleFunctional functional, int samples,
                                      std::uint64_t seed,
                                      const OracleOptions& options = {}) {
  return oracle_estimate(ctx, t, nullptr, functional, samples, seed, options);
}

}  // namespace semishell
