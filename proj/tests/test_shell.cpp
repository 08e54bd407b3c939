#include "semishell/shell.hpp"
#include "semishell/generate.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace semishell;
using namespace semishell::testing;

TEST_CASE("omega_a values") {
  Rng rng(301);
  const PositiveContext id = build_context(ComplexMatrix::Identity(3, 3));
  const ComplexMatrix g = rng.cgaussian_mat(3, 3);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  CHECK(omega_a(id, h, 1e-9) == doctest::Approx(spectral_norm(h)).epsilon(1e-9));

  CHECK(omega_a(build_context(diag({1, 0, 0})), perm_example(), 1e-9) == kInf);

  // Compression of [[1,1],[0,1]] under A = diag(4,1) is [[1,2],[0,1]].
  const PositiveContext ctx = build_context(diag({4, 1}));
  CHECK(omega_a(ctx, cmat({{1, 1}, {0, 1}}), 1e-9) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("r_a values") {
  Rng rng(303);
  const PositiveContext id = build_context(ComplexMatrix::Identity(3, 3));
  const ComplexMatrix t = rng.cgaussian_mat(3, 3);
  CHECK(r_a(id, t) == doctest::Approx(spectral_radius(t)));

  const PositiveContext ctx = build_context(diag({4, 1}));
  CHECK(r_a(ctx, jordan2()) == doctest::Approx(0.0));
  CHECK(r_a(ctx, cmat({{1, 1}, {0, 1}})) == doctest::Approx(1.0));
  CHECK(r_a(build_context(diag({1, 0, 0})), perm_example()) == kInf);
}

TEST_CASE("domega_a values") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  CHECK(domega_a(id, ComplexMatrix::Identity(2, 2), 1e-9, 1) == doctest::Approx(M_SQRT2));

  // A T = 0 forces the radius to vanish.
  Rng rng(307);
  const PositiveContext ctx = build_context(random_psd(rng, 4, 2));
  const ComplexMatrix t0 = null_range_operator(rng, ctx);
  CHECK(domega_a(ctx, t0, 1e-9, 1) <= 1e-12);

  // A-selfadjoint lift: Hermitian compression with norm s.
  const ComplexMatrix m = lifted_normaloid(rng, ctx, /*hermitian=*/true);
  const double s = op_seminorm(ctx, m);
  CHECK(domega_a(ctx, m, 1e-9, 5) ==
        doctest::Approx(s * std::sqrt(1.0 + s * s)).epsilon(1e-9));
  CHECK(domega_a(build_context(diag({1, 0, 0})), perm_example(), 1e-9, 1) == kInf);
}

TEST_CASE("shell of the identity is the single point (1,1)") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  const ShellCloud cloud =
      shell_sample(id, ComplexMatrix::Identity(2, 2), ShellMode::Ambient, 50, 3);
  for (const ShellPoint& p : cloud.points) {
    CHECK(std::abs(p.lambda - Complex(1, 0)) < 1e-10);
    CHECK(p.mu == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("rank-one examples trace the paraboloid mu = |lambda|^2") {
  // For rank-one A the Cauchy-Schwarz inequality collapses to an equality,
  // so every ambient point satisfies mu = |lambda|^2 on both examples.
  for (const ComplexMatrix& a : {diag({0, 0, 1}), diag({1, 0, 0})}) {
    const PositiveContext ctx = build_context(a);
    const ShellCloud cloud =
        shell_sample(ctx, perm_example(), ShellMode::Ambient, 300, 11, 2.0);
    for (const ShellPoint& p : cloud.points)
      CHECK(std::abs(p.mu - std::norm(p.lambda)) <= 1e-10 * (1.0 + p.mu));
  }
}

TEST_CASE("unbounded shell grows with the null scale") {
  const PositiveContext ctx = build_context(diag({1, 0, 0}));
  double max1 = 0.0, max10 = 0.0;
  for (const ShellPoint& p :
       shell_sample(ctx, perm_example(), ShellMode::Ambient, 200, 5, 1.0).points)
    max1 = std::max(max1, std::abs(p.lambda));
  for (const ShellPoint& p :
       shell_sample(ctx, perm_example(), ShellMode::Ambient, 200, 5, 10.0).points)
    max10 = std::max(max10, std::abs(p.lambda));
  CHECK(max10 >= 5.0 * max1);
}

TEST_CASE("compressed sampling requires boundedness and stays in the bounding region") {
  const PositiveContext ctx = build_context(diag({1, 0, 0}));
  CHECK_THROWS_AS(shell_sample(ctx, perm_example(), ShellMode::Compressed, 10, 1),
                  NotABoundedError);

  Rng rng(311);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 4;
    const PositiveContext c = build_context(random_psd(rng, n, trial % 2));
    const ComplexMatrix t = random_operator(rng, c, OperatorKind::RangeLifted);
    const ShellCloud cloud = shell_sample(c, t, ShellMode::Compressed, 150, 17 + trial);
    const ShellSummary sum = shell_summary(cloud, c, t, {}, /*auto_probes=*/false);
    CHECK(sum.lambda_violations == 0);
    CHECK(sum.mu_violations == 0);
    for (const ShellPoint& p : cloud.points) {
      REQUIRE(p.witness.has_value());
      CHECK(std::abs(a_norm_vec(c, *p.witness) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("convexity probe fails on the non-convex rank-one example") {
  // (1,1) and (i,1) are shell points but their midpoint ((1+i)/2, 1) is not;
  // the independent 1-D oracle gives the distance floor.
  const PositiveContext ctx = build_context(diag({0, 0, 1}));
  const Complex target(0.5, 0.5);
  const double floor = paraboloid_distance_oracle(target, 1.0);
  CHECK(floor > 0.2);

  const ConvexityProbe probe = convexity_probe(ctx, perm_example(), target, 1.0, 9);
  CHECK_FALSE(probe.pass);
  CHECK(probe.distance >= floor - 1e-6);
  CHECK(probe.distance <= 1.05 * floor);
}

TEST_CASE("convexity probe reaches realized targets") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  const ConvexityProbe trivial =
      convexity_probe(id, ComplexMatrix::Identity(2, 2), Complex(1, 0), 1.0, 4);
  CHECK(trivial.pass);
  CHECK(trivial.distance < 1e-6);

  // Midpoints of compressed clouds are realized when the compression
  // dimension is at least 3.
  Rng rng(313);
  const PositiveContext ctx = build_context(random_psd(rng, 4, 1));
  REQUIRE(ctx.rank == 3);
  const ComplexMatrix t = random_operator(rng, ctx, OperatorKind::RangeLifted);
  const ShellCloud cloud = shell_sample(ctx, t, ShellMode::Compressed, 40, 21);
  const ShellSummary sum = shell_summary(cloud, ctx, t);
  REQUIRE(!sum.probes.empty());
  for (const ConvexityProbe& p : sum.probes) CHECK(p.pass);
}

TEST_CASE("classify on classical instances") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  const ClassReport jordan = classify(id, jordan2(), 1e-8, 1);
  CHECK(jordan.aBounded);
  CHECK(jordan.aAdjointable);
  CHECK_FALSE(jordan.aSelfAdjoint);
  CHECK_FALSE(jordan.aNormal);
  CHECK_FALSE(jordan.aHyponormal);
  CHECK_FALSE(jordan.aUnitary);
  CHECK_FALSE(jordan.aNormaloid);
  CHECK(jordan.omegaA == doctest::Approx(0.5));
  CHECK(jordan.opnormA == doctest::Approx(1.0));
  CHECK(jordan.rA == doctest::Approx(0.0));
  CHECK(jordan.domegaA == doctest::Approx(1.0));

  Rng rng(317);
  const ComplexMatrix g = rng.cgaussian_mat(2, 2);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  const ClassReport herm = classify(id, h, 1e-8, 1);
  CHECK(herm.aSelfAdjoint);
  CHECK(herm.aNormal);
  CHECK(herm.aHyponormal);
  CHECK(herm.aNormaloid);

  const ClassReport unbounded = classify(build_context(diag({1, 0, 0})), perm_example(), 1e-8, 1);
  CHECK_FALSE(unbounded.aBounded);
  CHECK(unbounded.omegaA == kInf);
  CHECK(unbounded.opnormA == kInf);
}

TEST_CASE("lifted unitaries classify as A-unitary with unit seminorm") {
  Rng rng(331);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + trial;
    const PositiveContext ctx = build_context(random_psd(rng, n, trial % 2));
    const ComplexMatrix u = lifted_unitary(rng, ctx);
    const ClassReport rep = classify(ctx, u, 1e-8, 3);
    CHECK(rep.aUnitary);
    CHECK(std::abs(rep.opnormA - 1.0) <= 1e-8);
    // ||Ux||_A = ||x||_A on samples, by construction.
    for (const ComplexVector& x : sample_a_unit(ctx, 10, 41 + trial, 1.0))
      CHECK(a_norm_vec(ctx, ComplexVector(u * x)) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("geq_a detects order and its failure") {
  // A T^# T is T^* A T (Hermitian PSD), the shape the relation is used on.
  Rng rng(337);
  const PositiveContext ctx = build_context(random_psd(rng, 3, 0));
  const ComplexMatrix t = random_operator(rng, ctx, OperatorKind::RangeLifted);
  const ComplexMatrix tst = sharp(ctx, t) * t;
  CHECK(geq_a(ctx, tst, ComplexMatrix::Zero(3, 3), 1e-10));
  CHECK_FALSE(geq_a(ctx, ComplexMatrix::Zero(3, 3), tst, 1e-10));
}

TEST_CASE("infinite invariants propagate without arithmetic on sentinels") {
  const PositiveContext ctx = build_context(diag({1, 0, 0}));
  const ClassReport rep = classify(ctx, perm_example(), 1e-8, 1);
  CHECK(std::isinf(rep.omegaA));
  CHECK(std::isinf(rep.opnormA));
  CHECK(std::isinf(rep.rA));
  CHECK(std::isinf(rep.domegaA));
  CHECK_FALSE(rep.aNormaloid);
}
