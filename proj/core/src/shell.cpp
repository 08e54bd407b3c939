#include "semishell/shell.hpp"

#include "semishell/rng.hpp"
#include "local_search.hpp"

#include <algorithm>
#include <cmath>

namespace semishell {

double omega_a(const PositiveContext& ctx, const ComplexMatrix& t, double tol) {
  if (!check_a_bounded(ctx, t)) return kInf;
  return numerical_radius(compress(ctx, t).M, tol);
}

double r_a(const PositiveContext& ctx, const ComplexMatrix& t) {
  if (!check_a_bounded(ctx, t)) return kInf;
  return spectral_radius(compress(ctx, t).M);
}

double domega_a(const PositiveContext& ctx, const ComplexMatrix& t, double tol,
                std::uint64_t seed) {
  if (!check_a_bounded(ctx, t)) return kInf;
  return dw_radius(compress(ctx, t).M, tol, seed);
}

ShellCloud shell_sample(const PositiveContext& ctx, const ComplexMatrix& t,
                        ShellMode mode, int count, std::uint64_t seed,
                        double null_scale, bool keep_witnesses) {
  if (count < 1) throw Error("shell_sample: count must be >= 1");
  if (t.rows() != ctx.n || t.cols() != ctx.n)
    throw DimensionMismatchError("shell_sample: operator must match the context dimension");

  ShellCloud cloud;
  cloud.mode = mode;
  cloud.count = count;
  cloud.seed = seed;
  cloud.null_scale = null_scale;
  cloud.points.reserve(count);

  if (mode == ShellMode::Ambient) {
    cloud.opnorm = op_seminorm(ctx, t);
    for (ComplexVector& x : sample_a_unit(ctx, count, seed, null_scale)) {
      const ComplexVector tx = t * x;
      ShellPoint p;
      p.lambda = a_inner(ctx, tx, x);
      p.mu = std::max(a_inner(ctx, tx, tx).real(), 0.0);
      if (keep_witnesses) p.witness = std::move(x);
      cloud.points.push_back(std::move(p));
    }
  } else {
    if (!check_a_bounded(ctx, t))
      throw NotABoundedError("shell_sample: compressed mode requires an A-bounded operator");
    const ComplexMatrix m = compress(ctx, t).M;
    cloud.opnorm = spectral_norm(m);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
      const ComplexVector c = rng.unit_vec(ctx.rank);
      const ComplexVector w = m * c;
      ShellPoint p;
      p.lambda = c.dot(w);  // c^* M c
      p.mu = w.squaredNorm();
      if (keep_witnesses) p.witness = witness_from_coords(ctx, c);
      cloud.points.push_back(std::move(p));
    }
  }
  return cloud;
}

ConvexityProbe convexity_probe(const PositiveContext& ctx, const ComplexMatrix& t,
                               Complex target_lambda, double target_mu,
                               std::uint64_t seed,
                               const std::vector<ComplexVector>& extra_starts) {
  if (t.rows() != ctx.n || t.cols() != ctx.n)
    throw DimensionMismatchError("convexity_probe: operator must match the context dimension");

  const auto distance = [&](const ComplexVector& x) {
    const ComplexVector tx = t * x;
    const Complex lambda = a_inner(ctx, tx, x);
    const double mu = std::max(a_inner(ctx, tx, tx).real(), 0.0);
    return std::sqrt(std::norm(lambda - target_lambda) + (mu - target_mu) * (mu - target_mu));
  };

  ConvexityProbe probe;
  probe.target_lambda = target_lambda;
  probe.target_mu = target_mu;

  // Restarting from the stalled point with a fresh radius lets the
  // coordinate search cut across diagonal valleys it otherwise crawls.
  const auto search = [&](const ComplexVector& start) {
    ComplexVector x = start;
    for (int round = 0; round < 3; ++round) {
      const auto res =
          detail::a_unit_coordinate_search(ctx, x, distance, /*maximize=*/false, 300,
                                           round == 0 ? 0.5 : 0.1);
      if (res.value < probe.distance) probe.distance = res.value;
      x = res.point;
      if (probe.distance < 1e-6) break;
    }
  };

  for (const ComplexVector& start : extra_starts)
    if (start.size() == ctx.n) search(start);

  // Null components can carry the shell arbitrarily far, so one family of
  // starts is scaled to the target's magnitude.
  const double hint =
      std::max({1.0, 2.0 * std::abs(target_lambda), 2.0 * std::sqrt(std::max(target_mu, 0.0))});
  int family = 0;
  for (double ns : {0.0, 1.0, hint}) {
    for (const ComplexVector& start : sample_a_unit(ctx, 3, derive_seed(seed, 100 + family), ns))
      search(start);
    ++family;
    if (ctx.rank == ctx.n) break;  // null families are all identical
  }
  probe.pass = probe.distance < 1e-4;
  return probe;
}

ShellSummary shell_summary(const ShellCloud& cloud, const PositiveContext& ctx,
                           const ComplexMatrix& t,
                           const std::vector<std::pair<Complex, double>>& probe_targets,
                           bool auto_probes) {
  ShellSummary s;
  s.opnorm = cloud.opnorm;
  for (const ShellPoint& p : cloud.points) {
    s.max_abs_lambda = std::max(s.max_abs_lambda, std::abs(p.lambda));
    s.max_mu = std::max(s.max_mu, p.mu);
    if (std::norm(p.lambda) > p.mu + 1e-9) ++s.lambda_violations;
    if (std::isfinite(cloud.opnorm) && p.mu > cloud.opnorm * cloud.opnorm + 1e-9)
      ++s.mu_violations;
  }

  struct ProbeTask {
    Complex lambda;
    double mu;
    std::vector<ComplexVector> starts;
  };
  std::vector<ProbeTask> tasks;
  for (const auto& [lam, mu] : probe_targets) tasks.push_back({lam, mu, {}});

  if (tasks.empty() && auto_probes && cloud.mode == ShellMode::Compressed &&
      cloud.points.size() >= 2) {
    // Midpoints of the extremal pairs along both axes of the lambda plane;
    // the endpoint witnesses seed the search.
    const auto less_re = [](const ShellPoint& a, const ShellPoint& b) {
      return a.lambda.real() < b.lambda.real();
    };
    const auto less_im = [](const ShellPoint& a, const ShellPoint& b) {
      return a.lambda.imag() < b.lambda.imag();
    };
    const auto add_task = [&](const ShellPoint& a, const ShellPoint& b) {
      ProbeTask task{0.5 * (a.lambda + b.lambda), 0.5 * (a.mu + b.mu), {}};
      if (a.witness) task.starts.push_back(*a.witness);
      if (b.witness) task.starts.push_back(*b.witness);
      for (const ProbeTask& prev : tasks)
        if (std::abs(prev.lambda - task.lambda) < 1e-12 && std::abs(prev.mu - task.mu) < 1e-12)
          return;
      tasks.push_back(std::move(task));
    };
    const auto by_re = std::minmax_element(cloud.points.begin(), cloud.points.end(), less_re);
    const auto by_im = std::minmax_element(cloud.points.begin(), cloud.points.end(), less_im);
    add_task(*by_re.first, *by_re.second);
    add_task(*by_im.first, *by_im.second);
  }

  std::uint64_t idx = 0;
  for (const ProbeTask& task : tasks)
    s.probes.push_back(convexity_probe(ctx, t, task.lambda, task.mu,
                                       derive_seed(cloud.seed, 7000 + idx++), task.starts));
  return s;
}

bool geq_a(const PositiveContext& ctx, const ComplexMatrix& x, const ComplexMatrix& y,
           double tol) {
  if (x.rows() != ctx.n || x.cols() != ctx.n || y.rows() != ctx.n || y.cols() != ctx.n)
    throw DimensionMismatchError("geq_a: operators must match the context dimension");
  const ComplexMatrix k = ctx.A * (x - y);
  const ComplexMatrix h = 0.5 * (k + k.adjoint());  // A(X-Y) need not be Hermitian in fp
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol * (1.0 + max_abs(h));
}

ClassReport classify(const PositiveContext& ctx, const ComplexMatrix& t, double tol,
                     std::uint64_t seed) {
  if (t.rows() != ctx.n || t.cols() != ctx.n)
    throw DimensionMismatchError("classify: operator must match the context dimension");
  if (tol <= 0.0) throw Error("classify: tol must be positive");

  ClassReport rep;
  const double bres = a_bounded_residual(ctx, t);
  const double ares = a_adjointable_residual(ctx, t);
  rep.aBounded = bres <= 1e-10;
  rep.aAdjointable = ares <= 1e-10;
  rep.boundednessMarginal = marginal_residual(bres);
  rep.adjointabilityMarginal = marginal_residual(ares);

  const double scale = 1.0 + ctx.norm_a * spectral_norm(t);
  rep.aSelfAdjoint = max_abs(ctx.A * t - t.adjoint() * ctx.A) <= tol * scale;

  if (rep.aBounded) {
    const ComplexMatrix m = compress(ctx, t).M;
    rep.opnormA = spectral_norm(m);
    rep.omegaA = numerical_radius(m, tol);
    rep.rA = spectral_radius(m);
    rep.domegaA = dw_radius(m, tol, seed);
    rep.aNormaloid = std::abs(rep.rA - rep.opnormA) <= tol * (1.0 + rep.opnormA);
  } else {
    rep.opnormA = rep.omegaA = rep.rA = rep.domegaA = kInf;
  }

  if (rep.aAdjointable) {
    const ComplexMatrix ts = sharp(ctx, t);
    const ComplexMatrix tst = ts * t;
    const ComplexMatrix tts = t * ts;
    rep.aNormal = max_abs(tst - tts) <= tol * (1.0 + max_abs(tst) + max_abs(tts));
    rep.aHyponormal = geq_a(ctx, tst, tts, tol);
    const double uscale = 1.0 + max_abs(tst) + max_abs(tts);
    rep.aUnitary = max_abs(tst - ctx.projA) <= tol * uscale &&
                   max_abs(tts - ctx.projA) <= tol * uscale;
  }
  return rep;
}

}  // namespace semishell
