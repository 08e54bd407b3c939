#pragma once

#include "semishell/types.hpp"

#include <cstdint>
#include <random>

namespace semishell {

// splitmix64 finalizer; good enough to decorrelate substreams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Substream seed for (seed, index); used wherever work is split so results
// do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 1));
}

// Seeded generator with hand-rolled Box-Muller so draws are reproducible
// across standard libraries (std::normal_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return (eng_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Complex cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * M_SQRT1_2;
  }

  ComplexVector cgaussian_vec(Eigen::Index n) {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cgaussian();
    return v;
  }

  ComplexMatrix cgaussian_mat(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cgaussian();
    return m;
  }

  // Uniform on the complex unit sphere of C^n.
  ComplexVector unit_vec(Eigen::Index n) {
    ComplexVector v;
    double norm = 0.0;
    do {
      v = cgaussian_vec(n);
      norm = v.norm();
    } while (norm < 1e-12);
    return v / norm;
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace semishell
