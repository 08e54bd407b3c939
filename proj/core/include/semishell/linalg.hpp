#pragma once

#include "semishell/types.hpp"

#include <cstdint>

namespace semishell {

struct EigResult {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, matching order
};

// Hermitian eigendecomposition. The input must be Hermitian within
// 1e-10 * (1 + max_abs(H)); throws NotHermitianError / NonSquareError.
EigResult herm_eig(const ComplexMatrix& h);

// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

// Max modulus over eigenvalues (general square matrix).
double spectral_radius(const ComplexMatrix& m);

// Classical numerical radius sup{|y*My| : ||y||=1}, evaluated as
// sup_theta lambda_max(Re(e^{i theta} M)) on a 1024-point grid over
// [0, pi) tracking both spectrum ends, then golden-section refinement
// of the winning bracket to width 1e-12.
double numerical_radius(const ComplexMatrix& m, double tol);

struct RadiusWitness {
  double value = 0.0;
  ComplexVector vec;  // unit vector with |vec* M vec| ~= value
};
RadiusWitness numerical_radius_witness(const ComplexMatrix& m, double tol);

// Davis-Wielandt radius sup{sqrt(|y*My|^2 + ||My||^4) : ||y||=1} by
// multi-start Riemannian gradient ascent on the unit sphere:
// 64 seeded random starts plus two deterministic warm starts (the
// numerical-radius witness and the top right singular vector).
// Deterministic for a fixed seed.
double dw_radius(const ComplexMatrix& m, double tol, std::uint64_t seed);

struct DwWitness {
  double value = 0.0;
  ComplexVector vec;
  double second_best = 0.0;  // best stalled local maximum below `value`
  bool multimodal = false;   // some start stalled more than 1e-6 below
};
DwWitness dw_radius_witness(const ComplexMatrix& m, double tol, std::uint64_t seed);

}  // namespace semishell
