#pragma once

#include "semishell/context.hpp"

#include <functional>

namespace semishell::detail {

// Derivative-free coordinate search over the A-unit sphere, used by the
// oracle refinement stage and the convexity witness search; deliberately
// shares no gradient code with the ascent kernels, and the objective is
// always evaluated on the ambient vector.
//
// The search variables are preconditioned: the range part lives on the
// euclidean unit sphere of y with x_r = V Sigma^{-1/2} (y/||y||) (which is
// exactly the A-unit constraint), the null part is free but capped so that
// floating-point leakage across the range/null split cannot masquerade as
// objective gains.
struct LocalSearchResult {
  double value = 0.0;
  ComplexVector point;
};

inline LocalSearchResult a_unit_coordinate_search(
    const PositiveContext& ctx, const ComplexVector& start,
    const std::function<double(const ComplexVector&)>& eval, bool maximize,
    int max_sweeps, double initial_radius = 0.5) {
  const double sign = maximize ? 1.0 : -1.0;
  const Eigen::Index r = ctx.rank;
  const Eigen::Index nz = ctx.n - r;
  constexpr double kNullCap = 1e6;

  // y = Sigma^{1/2} V^* x recovers the range coordinates of the start.
  ComplexVector y = ctx.sqrt_sigma.asDiagonal() * (ctx.V.adjoint() * start);
  if (y.norm() < 1e-10) y = ComplexVector::Unit(r, 0);
  ComplexVector z = nz > 0 ? ComplexVector(ctx.Z.adjoint() * start)
                           : ComplexVector(0);

  const auto ambient = [&](const ComplexVector& yy, const ComplexVector& zz) {
    ComplexVector x = ctx.V * (ctx.inv_sqrt_sigma.asDiagonal() * (yy / yy.norm()));
    if (nz > 0) x += ctx.Z * zz;
    return x;
  };

  double fx = sign * eval(ambient(y, z));
  double radius = initial_radius;
  static const Complex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

  for (int sweep = 0; sweep < max_sweeps && radius > 1e-10; ++sweep) {
    double best_gain = 0.0;
    ComplexVector best_y, best_z;
    double best_f = fx;
    const auto consider = [&](const ComplexVector& yy, const ComplexVector& zz) {
      const double fc = sign * eval(ambient(yy, zz));
      if (fc - fx > best_gain) {
        best_gain = fc - fx;
        best_f = fc;
        best_y = yy;
        best_z = zz;
      }
    };
    const double step = radius * y.norm();
    for (Eigen::Index i = 0; i < r; ++i) {
      for (const Complex& d : dirs) {
        ComplexVector yy = y;
        yy(i) += step * d;
        if (yy.norm() < 1e-10) continue;
        consider(yy, z);
      }
    }
    for (Eigen::Index i = 0; i < nz; ++i) {
      for (const Complex& d : dirs) {
        ComplexVector zz = z;
        zz(i) += radius * (1.0 + std::abs(z(i))) * d;
        if (zz.norm() > kNullCap) continue;
        consider(y, zz);
      }
    }
    if (best_gain > 0.0) {
      y = std::move(best_y);
      if (nz > 0) z = std::move(best_z);
      fx = best_f;
    } else {
      radius *= 0.5;
    }
  }
  return {sign * fx, ambient(y, z)};
}

}  // namespace semishell::detail
