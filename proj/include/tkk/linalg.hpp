#ifndef TKK_LINALG_HPP
#define TKK_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tkk/tolerance.hpp"

namespace tkk {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest singular value of a dense complex matrix.
double spectral_norm(const CMatrix& m);

/// Number of singular values above tol.algebraic * sigma_max; rank(0) = 0.
int numeric_rank(const CMatrix& m, const Tolerance& tol = Tolerance{});
int numeric_rank(const RMatrix& m, const Tolerance& tol = Tolerance{});

/// Kind of a real-linear operator between complex coordinate spaces.
enum class OpKind { complex_linear, conjugate_linear, general };

OpKind compose_kinds(OpKind a, OpKind b);
std::string to_string(OpKind k);
OpKind op_kind_from_string(const std::string& s);

/// Real-linear operator C^n -> C^m stored as a 2m x 2n real matrix acting on
/// stacked coordinates (re_1..re_n, im_1..im_n). Complex-linear and
/// conjugate-linear maps are special cases; the real matrix is the source of
/// truth, the kind tag records which block symmetry holds at construction.
struct RealLinearOp {
  int domain_dim = 0;    // complex dimension n
  int codomain_dim = 0;  // complex dimension m
  RMatrix real_matrix;   // 2m x 2n
  OpKind kind = OpKind::general;

  RealLinearOp() = default;
  RealLinearOp(int n, int m, RMatrix rm, OpKind k);

  /// Complex-linear map x |-> A x.
  static RealLinearOp from_complex(const CMatrix& a);
  /// Conjugate-linear map x |-> A conj(x).
  static RealLinearOp from_conjugate(const CMatrix& a);
  static RealLinearOp identity(int n);

  CVector apply(const CVector& x) const;

  /// For a complex-linear op, the complex matrix it represents.
  CMatrix complex_matrix() const;
  /// For a conjugate-linear op, the matrix A with x |-> A conj(x).
  CMatrix conjugate_matrix() const;

  /// Residuals of the commutation relations with multiplication by i.
  double complex_linearity_residual() const;
  double conjugate_linearity_residual() const;

  bool is_bijective(const Tolerance& tol = Tolerance{}) const;
  RealLinearOp inverse() const;

  double norm() const { return real_matrix.norm() == 0 ? 0 : svd_norm(); }

 private:
  double svd_norm() const;
};

/// Composition A o B; kinds follow the usual table (conj o conj = complex).
RealLinearOp op_compose(const RealLinearOp& a, const RealLinearOp& b);

/// Operator equality up to tol.algebraic * (1 + max operand norm).
bool op_equal(const RealLinearOp& a, const RealLinearOp& b, const Tolerance& tol = Tolerance{});

/// The multiply-by-i block matrix on stacked (re, im) coordinates.
RMatrix j_matrix(int n);

// JSON encodings.
// CMatrix: {"rows":m,"cols":n,"data":[[re,im],...]} row-major.
// RealLinearOp: {"kind":...,"n":...,"m":...,"real_matrix":[[...],...]}.
nlohmann::json cmatrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const nlohmann::json& j);
nlohmann::json op_to_json(const RealLinearOp& op);
RealLinearOp op_from_json(const nlohmann::json& j);

}  // namespace tkk

#endif
