#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tkk/linalg.hpp"
#include "tkk/rng.hpp"

using namespace tkk;

namespace {

// Independent oracle: power iteration on m^* m.
double power_iteration_norm(const CMatrix& m, int iters = 500) {
  const CMatrix g = m.adjoint() * m;
  CVector v = CVector::Ones(m.cols());
  v.normalize();
  for (int i = 0; i < iters; ++i) {
    v = g * v;
    const double n = v.norm();
    if (n == 0) return 0;
    v /= n;
  }
  return std::sqrt(std::abs((v.adjoint() * g * v)(0)));
}

}  // namespace

TEST_CASE("spectral norm matches power iteration") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const CMatrix m = rng.cmatrix(rng.uniform_int(1, 6), rng.uniform_int(1, 6));
    CHECK(spectral_norm(m) == doctest::Approx(power_iteration_norm(m)).epsilon(1e-10));
  }
  CHECK(spectral_norm(CMatrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("numeric rank on constructed low-rank matrices") {
  Rng rng(12);
  for (int r = 0; r <= 4; ++r) {
    CMatrix m = CMatrix::Zero(6, 5);
    for (int k = 0; k < r; ++k) m += rng.cvector(6) * rng.cvector(5).adjoint();
    CHECK(numeric_rank(m) == r);
  }
}

TEST_CASE("real-linear representation of complex and conjugate maps") {
  Rng rng(13);
  const CMatrix a = rng.cmatrix(4, 3);
  const RealLinearOp lin = RealLinearOp::from_complex(a);
  const RealLinearOp conj = RealLinearOp::from_conjugate(a);
  for (int i = 0; i < 10; ++i) {
    const CVector x = rng.cvector(3);
    CHECK((lin.apply(x) - a * x).norm() == doctest::Approx(0.0));
    CHECK((conj.apply(x) - a * x.conjugate()).norm() == doctest::Approx(0.0));
  }
  CHECK((lin.complex_matrix() - a).norm() == doctest::Approx(0.0));
  CHECK((conj.conjugate_matrix() - a).norm() == doctest::Approx(0.0));
  CHECK(lin.complex_linearity_residual() == doctest::Approx(0.0));
  CHECK(conj.conjugate_linearity_residual() == doctest::Approx(0.0));
  CHECK(conj.complex_linearity_residual() > 0.1);
}

TEST_CASE("composition kinds and inverse") {
  Rng rng(14);
  const CMatrix u = rng.unitary(4);
  const RealLinearOp c = RealLinearOp::from_conjugate(u);
  const RealLinearOp cc = op_compose(c, c);
  CHECK(cc.kind == OpKind::complex_linear);
  CHECK((cc.complex_matrix() - u * u.conjugate()).norm() == doctest::Approx(0.0).epsilon(1e-12));

  const RealLinearOp lin = RealLinearOp::from_complex(u);
  CHECK(lin.is_bijective());
  CHECK(op_equal(op_compose(lin, lin.inverse()), RealLinearOp::identity(4)));
  RealLinearOp degenerate = lin;
  degenerate.real_matrix.row(0).setZero();
  CHECK_FALSE(degenerate.is_bijective());
}

TEST_CASE("multiplication by i commutes with complex-linear blocks") {
  Rng rng(15);
  const RealLinearOp lin = RealLinearOp::from_complex(rng.cmatrix(3, 3));
  const RMatrix j = j_matrix(3);
  CHECK((lin.real_matrix * j - j * lin.real_matrix).norm() == doctest::Approx(0.0));
}

TEST_CASE("operator JSON round trip preserves action") {
  Rng rng(16);
  const RealLinearOp op = RealLinearOp::from_conjugate(rng.cmatrix(3, 2));
  const RealLinearOp back = op_from_json(op_to_json(op));
  CHECK(back.kind == op.kind);
  CHECK(op_equal(back, op));
}
