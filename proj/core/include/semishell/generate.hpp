#pragma once

#include "semishell/compression.hpp"
#include "semishell/rng.hpp"

#include <utility>

namespace semishell {

// Random instance generators shared by the verification battery, the tests
// and the benchmarks. All are deterministic functions of the Rng state.

// A = G^* G / n with G complex Gaussian; optionally the smallest
// `zero_eigs` eigenvalues are projected to exactly 0.
ComplexMatrix random_psd(Rng& rng, int n, int zero_eigs = 0);

ComplexMatrix random_matrix(Rng& rng, int n);

enum class OperatorKind {
  Unrestricted,   // plain Gaussian (A-bounded only by luck)
  RangeLifted,    // lift of an r x r Gaussian: guaranteed A-bounded
  NullViolating,  // forced to map null(A) outside null(A) when rank < n
};

ComplexMatrix random_operator(Rng& rng, const PositiveContext& ctx, OperatorKind kind);

// Haar-ish r x r unitary (QR of a Gaussian with phase fix).
ComplexMatrix random_unitary(Rng& rng, int r);

// A-unitary operator U = lift(Q) for unitary Q; compress(U) == Q so
// ||Ux||_A = ||x||_A by construction.
ComplexMatrix lifted_unitary(Rng& rng, const PositiveContext& ctx);

// Operator whose compression is Hermitian (hermitian=true) or normal;
// both are A-normaloid.
ComplexMatrix lifted_normaloid(Rng& rng, const PositiveContext& ctx, bool hermitian);

// Lift of a nilpotent Jordan block on the first two compressed coordinates:
// omega_A = 1/2, ||T||_A = 1, r_A = 0. Requires rank >= 2.
ComplexMatrix lifted_jordan(const PositiveContext& ctx);

// Pair of A-hyponormal (in fact A-normal) operators with a shared dominant
// eigenvector, hence radius-parallel with that eigenvector as witness.
std::pair<ComplexMatrix, ComplexMatrix> hyponormal_radius_parallel_pair(
    Rng& rng, const PositiveContext& ctx);

// T with A T = 0: columns confined to null(A). Returns the zero matrix when
// A has full rank.
ComplexMatrix null_range_operator(Rng& rng, const PositiveContext& ctx);

}  // namespace semishell
