#include "semishell/context.hpp"
#include "semishell/generate.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace semishell;
using namespace semishell::testing;

TEST_CASE("build_context on the identity") {
  const PositiveContext ctx = build_context(ComplexMatrix::Identity(3, 3));
  CHECK(ctx.rank == 3);
  CHECK(ctx.Z.cols() == 0);
  CHECK(max_abs(ctx.sqrtA - ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(max_abs(ctx.pinvA - ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(max_abs(ctx.projA - ComplexMatrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("build_context on diag(4,0)") {
  const PositiveContext ctx = build_context(diag({4, 0}));
  CHECK(ctx.rank == 1);
  CHECK(ctx.sigma(0) == doctest::Approx(4.0));
  CHECK(max_abs(ctx.sqrtA - diag({2, 0})) < 1e-12);
  CHECK(max_abs(ctx.pinvA - diag({0.25, 0})) < 1e-12);
  CHECK(max_abs(ctx.projA - diag({1, 0})) < 1e-12);
}

TEST_CASE("build_context on diag(1,0,0) spans the right null space") {
  const PositiveContext ctx = build_context(diag({1, 0, 0}));
  CHECK(ctx.rank == 1);
  CHECK(ctx.Z.cols() == 2);
  CHECK(max_abs(ctx.A * ctx.Z) <= ctx.eps_rank);
  CHECK(max_abs(ctx.Z.adjoint() * ctx.Z - ComplexMatrix::Identity(2, 2)) < 1e-12);
  CHECK(max_abs(ctx.projA * ctx.Z) < 1e-12);
}

TEST_CASE("build_context validates its input") {
  CHECK_THROWS_AS(build_context(diag({1, -1})), NotPositiveError);
  CHECK_THROWS_AS(build_context(ComplexMatrix::Zero(3, 3)), ZeroOperatorError);
  CHECK_THROWS_AS(build_context(cmat({{0, 1}, {0, 0}})), NotHermitianError);
  CHECK_THROWS_AS(build_context(ComplexMatrix::Zero(2, 3)), NonSquareError);
}

TEST_CASE("context identities hold on random PSD matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 5;
    const int zeros = trial % 3 == 0 ? 1 : 0;
    const ComplexMatrix a = random_psd(rng, n, zeros);
    const PositiveContext ctx = build_context(a);
    const double scale = 1.0 + spectral_norm(a);
    CHECK(max_abs(ctx.sqrtA * ctx.sqrtA - a) <= 1e-9 * scale);
    CHECK(max_abs(a * ctx.pinvA * a - a) <= 1e-9 * scale);
    CHECK(max_abs(ctx.pinvA * a * ctx.pinvA - ctx.pinvA) <= 1e-9 * scale);
    CHECK(max_abs(ctx.projA * ctx.projA - ctx.projA) <= 1e-10);
    CHECK(max_abs(ctx.projA - ctx.projA.adjoint()) <= 1e-10);
    CHECK(max_abs(ctx.projA - ctx.V * ctx.V.adjoint()) <= 1e-12);
    if (ctx.rank < ctx.n) CHECK(max_abs(a * ctx.Z) <= ctx.eps_rank);
  }
}

TEST_CASE("a_inner closed forms and conventions") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  CHECK(a_inner(id, cvec({1, 0}), cvec({1, 0})) == Complex(1, 0));

  const PositiveContext rank1 = build_context(diag({1, 0, 0}));
  CHECK(std::abs(a_inner(rank1, cvec({0, 1, 0}), cvec({0, 1, 0}))) < 1e-14);

  // <Ax|y> with the second slot conjugated: only the first coordinate
  // survives and contributes 4 * 1 * conj(1).
  const PositiveContext ctx = build_context(diag({4, 0}));
  CHECK(a_inner(ctx, cvec({1, 7}), cvec({1, -3})) == Complex(4, 0));

  CHECK_THROWS_AS(a_inner(ctx, cvec({1, 0, 0}), cvec({1, 0})), DimensionMismatchError);
}

TEST_CASE("a_norm_vec closed forms") {
  const PositiveContext id = build_context(ComplexMatrix::Identity(2, 2));
  CHECK(a_norm_vec(id, cvec({3, 4})) == doctest::Approx(5.0));

  const PositiveContext ctx = build_context(diag({4, 0}));
  CHECK(a_norm_vec(ctx, cvec({1, 9})) == doctest::Approx(2.0));
  CHECK(a_norm_vec(ctx, cvec({0, 5})) == doctest::Approx(0.0));
}

TEST_CASE("a_inner is sesquilinear and Cauchy-Schwarz holds") {
  Rng rng(103);
  const PositiveContext ctx = build_context(random_psd(rng, 4, 1));
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector x = rng.cgaussian_vec(4);
    const ComplexVector y = rng.cgaussian_vec(4);
    const Complex alpha = rng.cgaussian();
    CHECK(std::abs(a_inner(ctx, x, y) - std::conj(a_inner(ctx, y, x))) < 1e-12);
    CHECK(std::abs(a_inner(ctx, ComplexVector(alpha * x), y) - alpha * a_inner(ctx, x, y)) <
          1e-10);
    CHECK(std::abs(a_inner(ctx, x, y)) <= a_norm_vec(ctx, x) * a_norm_vec(ctx, y) + 1e-9);
  }
}

TEST_CASE("the A-seminorm kernel is the null space of the projection") {
  // Exactly representable A: the null space is exact and the seminorm of a
  // null vector is exactly zero.
  const PositiveContext exact = build_context(diag({1, 0, 0}));
  CHECK(a_norm_vec(exact, cvec({0, 2, -3})) == 0.0);
  CHECK((exact.projA * cvec({0, 2, -3})).norm() <= 1e-14);

  // Random PSD with clipped eigenvalues: sub-cutoff eigenvalues survive in A
  // at eps_rank level, so the seminorm of a null vector is O(sqrt(eps_rank)).
  Rng rng(107);
  const PositiveContext ctx = build_context(random_psd(rng, 5, 2));
  const double null_bound = 10.0 * std::sqrt(ctx.eps_rank);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector x = rng.cgaussian_vec(5);
    const bool zero_norm = a_norm_vec(ctx, x) <= null_bound * x.norm();
    const bool zero_proj = (ctx.projA * x).norm() <= 1e-10 * x.norm();
    CHECK(zero_norm == zero_proj);
    const ComplexVector z = ctx.Z * rng.cgaussian_vec(2);
    CHECK(a_norm_vec(ctx, z) <= null_bound * z.norm());
    CHECK((ctx.projA * z).norm() <= 1e-12 * z.norm());
  }
}

TEST_CASE("sample_a_unit produces A-unit vectors deterministically") {
  Rng rng(109);
  const PositiveContext ctx = build_context(random_psd(rng, 5, 2));
  const auto xs = sample_a_unit(ctx, 40, 7, 1.0);
  const auto xs_again = sample_a_unit(ctx, 40, 7, 1.0);
  REQUIRE(xs.size() == 40);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(a_norm_vec(ctx, xs[i]) - 1.0) <= 1e-12);
    CHECK(max_abs(xs[i] - xs_again[i]) == 0.0);  // bitwise reproducible
  }
}

TEST_CASE("sample_a_unit on the identity gives euclidean unit vectors") {
  const PositiveContext ctx = build_context(ComplexMatrix::Identity(3, 3));
  for (const ComplexVector& x : sample_a_unit(ctx, 10, 3, 1.0))
    CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample_a_unit null components scale without touching the A-norm") {
  const PositiveContext ctx = build_context(diag({1, 0, 0}));
  for (const ComplexVector& x : sample_a_unit(ctx, 10, 3, 0.0)) {
    CHECK(std::abs(std::abs(x(0)) - 1.0) < 1e-12);
    CHECK(std::abs(x(1)) < 1e-14);
    CHECK(std::abs(x(2)) < 1e-14);
  }
  double max_null = 0.0;
  for (const ComplexVector& x : sample_a_unit(ctx, 10, 3, 10.0)) {
    CHECK(std::abs(a_norm_vec(ctx, x) - 1.0) <= 1e-12);
    max_null = std::max(max_null, std::hypot(std::abs(x(1)), std::abs(x(2))));
  }
  CHECK(max_null > 1.0);
}

TEST_CASE("coordinate norm of Ax recovers the A-norm") {
  Rng rng(113);
  const PositiveContext ctx = build_context(random_psd(rng, 4, 1));
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector x = rng.cgaussian_vec(4);
    const ComplexVector c =
        ctx.inv_sqrt_sigma.asDiagonal() * (ctx.V.adjoint() * (ctx.A * x));
    CHECK(std::abs(c.norm() - a_norm_vec(ctx, x)) <= 1e-10 * (1.0 + a_norm_vec(ctx, x)));
  }
}
