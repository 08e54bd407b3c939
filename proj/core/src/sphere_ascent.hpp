#pragma once

#include "semishell/rng.hpp"
#include "semishell/types.hpp"

#include <functional>
#include <vector>

namespace semishell::detail {

// Multi-start projected gradient ascent on the complex unit sphere for a
// smooth phase-invariant objective. `grad` returns the Wirtinger gradient
// d f / d conj(c); the tangent step is its projection orthogonal to c.
// Convergence: accepted improvement below 1e-12 * (1 + |f|).
struct AscentOutcome {
  double value = 0.0;
  ComplexVector point;
  std::vector<double> finals;  // final objective per start
};

inline AscentOutcome sphere_ascend(
    Eigen::Index dim, const std::vector<ComplexVector>& warm_starts, int random_starts,
    std::uint64_t seed, const std::function<double(const ComplexVector&)>& f,
    const std::function<ComplexVector(const ComplexVector&)>& grad) {
  AscentOutcome out;
  out.point = ComplexVector::Unit(dim, 0);
  out.value = f(out.point);

  std::vector<ComplexVector> starts = warm_starts;
  for (int i = 0; i < random_starts; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    starts.push_back(rng.unit_vec(dim));
  }

  for (const ComplexVector& start : starts) {
    ComplexVector c = start;
    double nc = c.norm();
    if (nc < 1e-12) continue;
    c /= nc;
    double fc = f(c);
    double alpha = 1.0;
    for (int it = 0; it < 500; ++it) {
      ComplexVector g = grad(c);
      ComplexVector tangent = g - c * (c.dot(g));  // Eigen dot conjugates c
      if (tangent.norm() <= 1e-14 * (1.0 + std::abs(fc))) break;
      bool accepted = false;
      for (int bt = 0; bt < 60; ++bt) {
        ComplexVector cand = c + alpha * tangent;
        const double norm = cand.norm();
        if (norm < 1e-12) { alpha *= 0.5; continue; }
        cand /= norm;
        const double fcand = f(cand);
        if (fcand > fc) {
          const double gain = fcand - fc;
          c = cand;
          fc = fcand;
          alpha = std::min(alpha * 2.0, 1e6);
          accepted = true;
          if (gain < 1e-12 * (1.0 + std::abs(fc))) it = 500;  // converged
          break;
        }
        alpha *= 0.5;
        if (alpha < 1e-18) break;
      }
      if (!accepted) break;
    }
    out.finals.push_back(fc);
    if (fc > out.value) {
      out.value = fc;
      out.point = c;
    }
  }
  return out;
}

// Second-highest final objective among starts that stalled clearly below the
// best; 0 when every start reached the best value.
inline double second_local_max(const std::vector<double>& finals, double best,
                               double gap = 1e-6) {
  double second = 0.0;
  bool found = false;
  for (double v : finals) {
    if (v < best - gap && (!found || v > second)) {
      second = v;
      found = true;
    }
  }
  return found ? second : best;
}

}  // namespace semishell::detail
