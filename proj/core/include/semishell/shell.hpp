#pragma once

#include "semishell/compression.hpp"

#include <optional>
#include <vector>

namespace semishell {

struct ShellPoint {
  Complex lambda;  // <Tx|x>_A
  double mu = 0.0;  // ||Tx||_A^2
  std::optional<ComplexVector> witness;  // A-unit x, when retained
};

enum class ShellMode { Ambient, Compressed };

struct ShellCloud {
  std::vector<ShellPoint> points;
  ShellMode mode = ShellMode::Ambient;
  int count = 0;
  std::uint64_t seed = 0;
  double null_scale = 1.0;  // sampling metadata (ambient mode)
  double opnorm = 0.0;      // ||T||_A, +inf when not A-bounded
};

// Ambient mode evaluates the definition on sample_a_unit vectors and works
// for any T (this is what exposes unbounded shells). Compressed mode
// evaluates (c^* M c, ||Mc||^2) on unit coordinate vectors and requires an
// A-bounded T (throws NotABoundedError otherwise).
ShellCloud shell_sample(const PositiveContext& ctx, const ComplexMatrix& t,
                        ShellMode mode, int count, std::uint64_t seed,
                        double null_scale = 1.0, bool keep_witnesses = true);

struct ConvexityProbe {
  Complex target_lambda;
  double target_mu = 0.0;
  double distance = kInf;  // best achieved distance to the target
  bool pass = false;       // distance < 1e-4
};

// Witness search: minimize the distance from (<Tx|x>_A, ||Tx||_A^2) to the
// target over the A-unit sphere (ambient coordinates, derivative-free
// multi-start descent). PASS certifies the target is realized by a point of
// the shell; a stall above a known floor certifies it is not. Callers may
// supply additional warm starts (e.g. witnesses of nearby cloud points).
ConvexityProbe convexity_probe(const PositiveContext& ctx, const ComplexMatrix& t,
                               Complex target_lambda, double target_mu,
                               std::uint64_t seed,
                               const std::vector<ComplexVector>& extra_starts = {});

struct ShellSummary {
  double max_abs_lambda = 0.0;
  double max_mu = 0.0;
  // |lambda|^2 > mu + 1e-9, and mu > ||T||_A^2 + 1e-9 when the norm is finite.
  int lambda_violations = 0;
  int mu_violations = 0;
  double opnorm = 0.0;
  std::vector<ConvexityProbe> probes;
};

// Summarizes a cloud against the bounding region {|lambda|^2 <= mu <= ||T||_A^2}.
// When no explicit targets are given, `auto_probes` is set and the cloud is
// compressed, midpoints of extremal point pairs are probed for convexity.
ShellSummary shell_summary(const ShellCloud& cloud, const PositiveContext& ctx,
                           const ComplexMatrix& t,
                           const std::vector<std::pair<Complex, double>>& probe_targets = {},
                           bool auto_probes = true);

// A-numerical radius; +inf when T is not A-bounded.
double omega_a(const PositiveContext& ctx, const ComplexMatrix& t, double tol);

// A-spectral radius lim ||T^n||_A^{1/n} = spectral radius of the compressed
// matrix; +inf when T is not A-bounded.
double r_a(const PositiveContext& ctx, const ComplexMatrix& t);

// A-Davis-Wielandt radius; +inf when T is not A-bounded.
double domega_a(const PositiveContext& ctx, const ComplexMatrix& t, double tol,
                std::uint64_t seed);

struct ClassReport {
  bool aBounded = false;
  bool aAdjointable = false;
  bool aSelfAdjoint = false;  // A T = T^* A
  bool aNormal = false;       // T^# T = T T^#
  bool aHyponormal = false;   // T^# T >=_A T T^#
  bool aUnitary = false;      // T^# T = T T^# = P_A
  bool aNormaloid = false;    // r_A(T) = ||T||_A
  bool boundednessMarginal = false;
  bool adjointabilityMarginal = false;
  double omegaA = 0.0;
  double opnormA = 0.0;
  double rA = 0.0;
  double domegaA = 0.0;
};

// >=_A comparison: min eigenvalue of the Hermitian part of A (X - Y) is
// >= -tol * (1 + scale).
bool geq_a(const PositiveContext& ctx, const ComplexMatrix& x, const ComplexMatrix& y,
           double tol);

ClassReport classify(const PositiveContext& ctx, const ComplexMatrix& t, double tol,
                     std::uint64_t seed);

}  // namespace semishell
