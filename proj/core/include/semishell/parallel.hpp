#pragma once

#include "semishell/shell.hpp"

namespace semishell {

enum class ParallelRelation { Seminorm, Radius };

struct ParallelCertificate {
  ParallelRelation relation = ParallelRelation::Seminorm;
  bool verdict = false;     // gap <= tol * (1 + target)
  bool conclusive = true;   // false when the gap falls in (tol, 10*tol] * (1 + target)
  Complex lambdaHat{1.0, 0.0};  // unimodular, verified via ||T + lambda S||_A
  std::optional<ComplexVector> witness;  // A-unit maximizer, absent in zero cases
  double achieved = 0.0;
  double target = 0.0;
  double gap = 0.0;  // target - achieved
  bool multimodal = false;  // radius relation: distinct local maxima > 1e-6 apart
  // Radius relation only: |<Tx|x>_A| and |<Sx|x>_A| at the witness, which a
  // passing certificate must place near omega_A(T), omega_A(S).
  double witnessOmegaT = 0.0;
  double witnessOmegaS = 0.0;
};

// Decides ||T + lambda S||_A = ||T||_A + ||S||_A for some unimodular lambda,
// via the attainment form sup{|<Tx|Sx>_A| : ||x||_A = 1}. In compressed
// coordinates the objective is the classical numerical radius of
// M_S^* M_T, so the theta-grid kernel applies. Throws NotABoundedError
// unless both operators are A-bounded. If A T = 0 or A S = 0 the relation
// holds trivially.
ParallelCertificate seminorm_parallel(const PositiveContext& ctx, const ComplexMatrix& t,
                                      const ComplexMatrix& s, double tol,
                                      std::uint64_t seed);

// Decides omega_A(T + lambda S) = omega_A(T) + omega_A(S) via the attainment
// form sup{|<Tx|x>_A <Sx|x>_A|}, by seeded multi-start ascent over unit
// coordinate vectors.
ParallelCertificate radius_parallel(const PositiveContext& ctx, const ComplexMatrix& t,
                                    const ComplexMatrix& s, double tol,
                                    std::uint64_t seed);

struct IdentityParallelReport {
  bool parallelToIdentity = false;   // (1) seminorm_parallel(T, I)
  bool radiusFormula = false;        // (2) domega = sqrt(omega^2 + opnorm^4)
  bool normaloid = false;            // (3) classify.aNormaloid
  bool closedForm = false;           // (4) domega = opnorm * sqrt(1 + opnorm^2)
  bool agreement = false;            // all four coincide
  std::optional<bool> geqA;          // omega^2 I >=_A T^# T, when A-adjointable
  double omegaA = 0.0;
  double opnormA = 0.0;
  double domegaA = 0.0;
};

// Evaluates the four equivalent conditions independently and reports them
// together with their agreement. Throws NotABoundedError.
IdentityParallelReport parallel_to_identity(const PositiveContext& ctx,
                                            const ComplexMatrix& t, double tol,
                                            std::uint64_t seed);

}  // namespace semishell
