#include "semishell/linalg.hpp"

#include "semishell/rng.hpp"
#include "sphere_ascent.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace semishell {

namespace {

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& m, double theta) {
  const ComplexMatrix e = std::polar(1.0, theta) * m;
  return 0.5 * (e + e.adjoint());
}

double lambda_max_of(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.rows() - 1);
}

// Golden-section maximization on [a, b]; assumes the bracket localizes the
// maximizer. Returns the best evaluated point.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double width) {
  constexpr double kGold = 0.6180339887498949;
  double c = b - kGold * (b - a);
  double d = a + kGold * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc >= fd ? c : d;
  double best_f = std::max(fc, fd);
  while (b - a > width) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + kGold * (b - a);
      fd = f(d);
      if (fd > best_f) { best_f = fd; best_x = d; }
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - kGold * (b - a);
      fc = f(c);
      if (fc > best_f) { best_f = fc; best_x = c; }
    }
  }
  return {best_x, best_f};
}

}  // namespace

EigResult herm_eig(const ComplexMatrix& h) {
  require_square(h, "herm_eig");
  if (!all_finite(h)) throw Error("herm_eig: non-finite entries");
  const double scale = 1.0 + max_abs(h);
  if (max_abs(h - h.adjoint()) > 1e-10 * scale)
    throw NotHermitianError("herm_eig: input is not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) throw Error("herm_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (!all_finite(m)) throw Error("spectral_norm: non-finite entries");
  if (m.rows() <= 16 && m.cols() <= 16) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius(const ComplexMatrix& m) {
  require_square(m, "spectral_radius");
  if (!all_finite(m)) throw Error("spectral_radius: non-finite entries");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw Error("spectral_radius: eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

RadiusWitness numerical_radius_witness(const ComplexMatrix& m, double tol) {
  require_square(m, "numerical_radius");
  if (tol <= 0.0) throw Error("numerical_radius: tol must be positive");
  if (!all_finite(m)) throw Error("numerical_radius: non-finite entries");
  const Eigen::Index n = m.rows();
  if (max_abs(m) == 0.0) return {0.0, ComplexVector::Unit(n, 0)};

  // lambda_max(H_{theta+pi}) = -lambda_min(H_theta), so 1024 grid points on
  // [0, pi) with both spectrum ends cover the full circle.
  constexpr int kGrid = 1024;
  const double step = M_PI / kGrid;
  double best = -kInf;
  double best_theta = 0.0;
  for (int k = 0; k < kGrid; ++k) {
    const double theta = k * step;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rotated_hermitian_part(m, theta),
                                                    Eigen::EigenvaluesOnly);
    const double hi = es.eigenvalues()(n - 1);
    const double lo = es.eigenvalues()(0);
    if (hi > best) { best = hi; best_theta = theta; }
    if (-lo > best) { best = -lo; best_theta = theta + M_PI; }
  }

  const auto g = [&](double theta) { return lambda_max_of(rotated_hermitian_part(m, theta)); };
  const auto [theta_hat, g_hat] = golden_max(g, best_theta - step, best_theta + step, 1e-12);

  const double value = std::max(best, g_hat);
  const double theta_star = g_hat >= best ? theta_hat : best_theta;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rotated_hermitian_part(m, theta_star));
  return {value, es.eigenvectors().col(n - 1)};
}

double numerical_radius(const ComplexMatrix& m, double tol) {
  return numerical_radius_witness(m, tol).value;
}

DwWitness dw_radius_witness(const ComplexMatrix& m, double tol, std::uint64_t seed) {
  require_square(m, "dw_radius");
  if (tol <= 0.0) throw Error("dw_radius: tol must be positive");
  if (!all_finite(m)) throw Error("dw_radius: non-finite entries");
  const Eigen::Index n = m.rows();
  if (max_abs(m) == 0.0) return {0.0, ComplexVector::Unit(n, 0), 0.0, false};

  const ComplexMatrix madj = m.adjoint();
  const auto f = [&](const ComplexVector& c) {
    const ComplexVector w = m * c;
    const Complex q = c.dot(w);  // c^* M c
    return std::norm(q) + std::pow(w.squaredNorm(), 2);
  };
  const auto grad = [&](const ComplexVector& c) {
    const ComplexVector w = m * c;
    const Complex q = c.dot(w);
    return ComplexVector(std::conj(q) * w + q * (madj * c) +
                         2.0 * w.squaredNorm() * (madj * w));
  };

  // Warm starts pin the sandwich lower bound max(omega, ||M||^2) <= dw:
  // the numerical-radius witness and the top right singular vector are
  // ascent starts, so neither bound can be lost to a bad basin.
  std::vector<ComplexVector> warm;
  warm.push_back(numerical_radius_witness(m, tol).vec);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  warm.push_back(svd.matrixV().col(0));

  const auto outcome = detail::sphere_ascend(n, warm, 64, seed, f, grad);
  DwWitness result;
  result.value = std::sqrt(outcome.value);
  result.vec = outcome.point;
  const double second_f = detail::second_local_max(outcome.finals, outcome.value);
  result.second_best = std::sqrt(std::max(second_f, 0.0));
  result.multimodal = second_f < outcome.value - 1e-6;
  return result;
}

double dw_radius(const ComplexMatrix& m, double tol, std::uint64_t seed) {
  return dw_radius_witness(m, tol, seed).value;
}

}  // namespace semishell
