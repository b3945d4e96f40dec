#include "tkk/linalg.hpp"

#include <Eigen/SVD>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace tkk {

double spectral_norm(const CMatrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("spectral_norm: non-finite entries");
  if (m.size() == 0 || m.norm() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

int numeric_rank(const CMatrix& m, const Tolerance& tol) {
  if (!m.allFinite()) throw std::invalid_argument("rank: non-finite entries");
  if (m.size() == 0 || m.norm() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) <= tol.algebraic) return 0;  // numerically zero matrix
  const double cut = tol.algebraic * s(0);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

int numeric_rank(const RMatrix& m, const Tolerance& tol) {
  return numeric_rank(CMatrix(m.cast<Complex>()), tol);
}

OpKind compose_kinds(OpKind a, OpKind b) {
  if (a == OpKind::general || b == OpKind::general) return OpKind::general;
  return a == b ? OpKind::complex_linear : OpKind::conjugate_linear;
}

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::complex_linear: return "complex_linear";
    case OpKind::conjugate_linear: return "conjugate_linear";
    default: return "general";
  }
}

OpKind op_kind_from_string(const std::string& s) {
  if (s == "complex_linear") return OpKind::complex_linear;
  if (s == "conjugate_linear") return OpKind::conjugate_linear;
  if (s == "general") return OpKind::general;
  throw std::invalid_argument("unknown operator kind: " + s);
}

RMatrix j_matrix(int n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = -RMatrix::Identity(n, n);
  j.block(n, 0, n, n) = RMatrix::Identity(n, n);
  return j;
}

RealLinearOp::RealLinearOp(int n, int m, RMatrix rm, OpKind k)
    : domain_dim(n), codomain_dim(m), real_matrix(std::move(rm)), kind(k) {
  if (real_matrix.rows() != 2 * m || real_matrix.cols() != 2 * n)
    throw std::invalid_argument("RealLinearOp: real_matrix must be 2m x 2n");
}

RealLinearOp RealLinearOp::from_complex(const CMatrix& a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  RMatrix rm(2 * m, 2 * n);
  rm.block(0, 0, m, n) = a.real();
  rm.block(0, n, m, n) = -a.imag();
  rm.block(m, 0, m, n) = a.imag();
  rm.block(m, n, m, n) = a.real();
  return RealLinearOp(n, m, std::move(rm), OpKind::complex_linear);
}

RealLinearOp RealLinearOp::from_conjugate(const CMatrix& a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  RMatrix rm(2 * m, 2 * n);
  rm.block(0, 0, m, n) = a.real();
  rm.block(0, n, m, n) = a.imag();
  rm.block(m, 0, m, n) = a.imag();
  rm.block(m, n, m, n) = -a.real();
  return RealLinearOp(n, m, std::move(rm), OpKind::conjugate_linear);
}

RealLinearOp RealLinearOp::identity(int n) {
  return RealLinearOp(n, n, RMatrix::Identity(2 * n, 2 * n), OpKind::complex_linear);
}

CVector RealLinearOp::apply(const CVector& x) const {
  if (x.size() != domain_dim) throw std::invalid_argument("RealLinearOp::apply: dimension mismatch");
  RVector rx(2 * domain_dim);
  rx.head(domain_dim) = x.real();
  rx.tail(domain_dim) = x.imag();
  RVector ry = real_matrix * rx;
  CVector y(codomain_dim);
  y.real() = ry.head(codomain_dim);
  y.imag() = ry.tail(codomain_dim);
  return y;
}

CMatrix RealLinearOp::complex_matrix() const {
  const int m = codomain_dim, n = domain_dim;
  CMatrix a(m, n);
  // c-linear projection (A+D)/2 + i (C-B)/2
  a.real() = 0.5 * (real_matrix.block(0, 0, m, n) + real_matrix.block(m, n, m, n));
  a.imag() = 0.5 * (real_matrix.block(m, 0, m, n) - real_matrix.block(0, n, m, n));
  return a;
}

CMatrix RealLinearOp::conjugate_matrix() const {
  const int m = codomain_dim, n = domain_dim;
  CMatrix a(m, n);
  a.real() = 0.5 * (real_matrix.block(0, 0, m, n) - real_matrix.block(m, n, m, n));
  a.imag() = 0.5 * (real_matrix.block(m, 0, m, n) + real_matrix.block(0, n, m, n));
  return a;
}

double RealLinearOp::complex_linearity_residual() const {
  return (real_matrix * j_matrix(domain_dim) - j_matrix(codomain_dim) * real_matrix).norm();
}

double RealLinearOp::conjugate_linearity_residual() const {
  return (real_matrix * j_matrix(domain_dim) + j_matrix(codomain_dim) * real_matrix).norm();
}

bool RealLinearOp::is_bijective(const Tolerance& tol) const {
  if (domain_dim != codomain_dim) return false;
  return numeric_rank(real_matrix, tol) == 2 * domain_dim;
}

RealLinearOp RealLinearOp::inverse() const {
  if (domain_dim != codomain_dim) throw std::invalid_argument("inverse: not square");
  RMatrix inv = real_matrix.partialPivLu().solve(RMatrix::Identity(2 * domain_dim, 2 * domain_dim));
  return RealLinearOp(codomain_dim, domain_dim, std::move(inv), kind);
}

double RealLinearOp::svd_norm() const {
  Eigen::JacobiSVD<RMatrix> svd(real_matrix);
  return svd.singularValues()(0);
}

RealLinearOp op_compose(const RealLinearOp& a, const RealLinearOp& b) {
  if (b.codomain_dim != a.domain_dim)
    throw std::invalid_argument("op_compose: dimension mismatch");
  return RealLinearOp(b.domain_dim, a.codomain_dim, a.real_matrix * b.real_matrix,
                      compose_kinds(a.kind, b.kind));
}

bool op_equal(const RealLinearOp& a, const RealLinearOp& b, const Tolerance& tol) {
  if (a.domain_dim != b.domain_dim || a.codomain_dim != b.codomain_dim) return false;
  const double scale = 1.0 + std::max(a.norm(), b.norm());
  Eigen::JacobiSVD<RMatrix> svd(a.real_matrix - b.real_matrix);
  const double diff = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return diff <= tol.algebraic * scale;
}

nlohmann::json cmatrix_to_json(const CMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix cmatrix_from_json(const nlohmann::json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& data = j.at("data");
  if (static_cast<int>(data.size()) != rows * cols)
    throw std::invalid_argument("CMatrix json: data length != rows*cols");
  CMatrix m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c, ++k)
      m(i, c) = Complex(data[k][0].get<double>(), data[k][1].get<double>());
  if (!m.allFinite()) throw std::invalid_argument("CMatrix json: non-finite entries");
  return m;
}

nlohmann::json op_to_json(const RealLinearOp& op) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < op.real_matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < op.real_matrix.cols(); ++j) row.push_back(op.real_matrix(i, j));
    rows.push_back(row);
  }
  return {{"kind", to_string(op.kind)}, {"n", op.domain_dim}, {"m", op.codomain_dim},
          {"real_matrix", rows}};
}

RealLinearOp op_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  const auto& rows = j.at("real_matrix");
  RMatrix rm(2 * m, 2 * n);
  if (static_cast<int>(rows.size()) != 2 * m)
    throw std::invalid_argument("RealLinearOp json: bad row count");
  for (int i = 0; i < 2 * m; ++i) {
    if (static_cast<int>(rows[i].size()) != 2 * n)
      throw std::invalid_argument("RealLinearOp json: bad column count");
    for (int c = 0; c < 2 * n; ++c) rm(i, c) = rows[i][c].get<double>();
  }
  return RealLinearOp(n, m, std::move(rm), op_kind_from_string(j.at("kind").get<std::string>()));
}

}  // namespace tkk
