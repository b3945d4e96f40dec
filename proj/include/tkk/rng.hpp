#ifndef TKK_RNG_HPP
#define TKK_RNG_HPP

#include <cstdint>
#include <random>

#include "tkk/linalg.hpp"

namespace tkk {

/// Seeded RNG passed explicitly through all sampling code paths.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Complex cnormal() { return Complex(normal(), normal()); }

  CVector cvector(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    return v;
  }

  CMatrix cmatrix(int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  /// Haar-ish random unitary via QR of a Gaussian matrix.
  CMatrix unitary(int n) {
    Eigen::HouseholderQR<CMatrix> qr(cmatrix(n, n));
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      Complex d = r(i, i);
      if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
  }

  std::uint64_t next_seed() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace tkk

#endif
