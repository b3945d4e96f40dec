#include "tkk/jordan.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace tkk {

V0Element box(const TripleSpace& s, const CVector& a, const CVector& b) {
  const int d = s.complex_dim();
  V0Element h;
  h.space = &s;
  h.generators = {{a, b}};
  h.has_generators = true;
  h.op = CMatrix(d, d);
  for (int k = 0; k < d; ++k) h.op.col(k) = s.triple(a, b, s.basis_element(k));
  return h;
}

V0Element natural(const V0Element& h) {
  const TripleSpace& s = *h.space;
  V0Element r;
  r.space = h.space;
  if (h.has_generators) {
    r.has_generators = true;
    r.op = CMatrix::Zero(s.complex_dim(), s.complex_dim());
    for (const auto& [a, b] : h.generators) {
      r.generators.emplace_back(b, a);
      r.op += box(s, b, a).op;
    }
  } else {
    // adjoint with respect to the associative inner product: G^-1 H^* G
    r.has_generators = false;
    const RVector& g = s.gram();
    r.op = g.cwiseInverse().asDiagonal() * h.op.adjoint() * g.asDiagonal();
  }
  return r;
}

double jordan_identity_residual(const TripleSpace& s, const CVector& a, const CVector& b,
                                const CVector& x, const CVector& y, const CVector& z) {
  const CVector lhs = s.triple(a, b, s.triple(x, y, z));
  const CVector rhs = s.triple(s.triple(a, b, x), y, z) - s.triple(x, s.triple(b, a, y), z) +
                      s.triple(x, y, s.triple(a, b, z));
  return s.norm(lhs - rhs);
}

RealLinearOp q_operator(const TripleSpace& s, const CVector& e) {
  const int d = s.complex_dim();
  CMatrix m(d, d);
  for (int k = 0; k < d; ++k) m.col(k) = s.triple(e, s.basis_element(k), e);
  return RealLinearOp::from_conjugate(m);
}

bool is_tripotent(const TripleSpace& s, const CVector& e, const Tolerance& tol) {
  const double res = s.norm(s.triple(e, e, e) - e);
  return res <= tol.algebraic * (1.0 + s.norm(e));
}

PeirceDecomposition peirce(const TripleSpace& s, const CVector& e, const Tolerance& tol) {
  if (!is_tripotent(s, e, tol)) throw std::invalid_argument("peirce: e is not a tripotent");
  const int d = s.complex_dim();
  const CMatrix q = q_operator(s, e).conjugate_matrix();
  const CMatrix p2 = q * q.conjugate();  // Q(e)^2 on coordinates
  const CMatrix b = box(s, e, e).op;
  const CMatrix p1 = 2.0 * (b - p2);
  const CMatrix p0 = CMatrix::Identity(d, d) - 2.0 * b + p2;
  PeirceDecomposition pd;
  pd.tripotent = e;
  pd.p2 = RealLinearOp::from_complex(p2);
  pd.p1 = RealLinearOp::from_complex(p1);
  pd.p0 = RealLinearOp::from_complex(p0);
  pd.dims = {numeric_rank(p2, tol), numeric_rank(p1, tol), numeric_rank(p0, tol)};
  return pd;
}

namespace {

CVector spin_minimal_tripotent(const TripleSpace& s, Rng& rng) {
  const int n = s.complex_dim();
  // two orthonormal real vectors
  RMatrix g(n, 2);
  for (int i = 0; i < n; ++i) {
    g(i, 0) = rng.normal();
    g(i, 1) = rng.normal();
  }
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ() * RMatrix::Identity(n, 2);
  const double phase = 2.0 * M_PI * rng.uniform();
  const Complex mu(std::cos(phase), std::sin(phase));
  CVector e(n);
  for (int i = 0; i < n; ++i) e(i) = 0.5 * mu * Complex(q(i, 0), q(i, 1));
  return e;
}

CVector spin_unitary_tripotent(const TripleSpace& s, Rng& rng) {
  const int n = s.complex_dim();
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  v.normalize();
  const double phase = 2.0 * M_PI * rng.uniform();
  const Complex mu(std::cos(phase), std::sin(phase));
  CVector e(n);
  for (int i = 0; i < n; ++i) e(i) = mu * v(i);
  return e;
}

CVector generate_tripotent(const TripleSpace& s, int target_rank, Rng& rng) {
  const int d = s.complex_dim();
  if (target_rank == 0) return CVector::Zero(d);
  switch (s.descriptor().type) {
    case Factor::cartan1: {
      const int m = s.descriptor().rows, n = s.descriptor().cols;
      Eigen::JacobiSVD<CMatrix> svd(rng.cmatrix(m, n), Eigen::ComputeFullU | Eigen::ComputeFullV);
      CMatrix e = svd.matrixU().leftCols(target_rank) * svd.matrixV().leftCols(target_rank).adjoint();
      return s.from_matrix(e);
    }
    case Factor::cartan2: {
      const int n = s.descriptor().n;
      const CMatrix u = rng.unitary(n);
      CMatrix e = CMatrix::Zero(n, n);
      for (int b = 0; b < target_rank; ++b) {
        const auto c0 = u.col(2 * b), c1 = u.col(2 * b + 1);
        e += c0 * c1.transpose() - c1 * c0.transpose();
      }
      return s.from_matrix(e);
    }
    case Factor::cartan3: {
      const int n = s.descriptor().n;
      const CMatrix u = rng.unitary(n);
      CMatrix e = CMatrix::Zero(n, n);
      for (int k = 0; k < target_rank; ++k) e += u.col(k) * u.col(k).transpose();
      return s.from_matrix(e);
    }
    case Factor::spin: {
      if (target_rank == 1) return spin_minimal_tripotent(s, rng);
      return spin_unitary_tripotent(s, rng);
    }
    case Factor::sum: {
      const auto& parts = s.parts();
      std::vector<int> ranks(parts.size(), 0);
      int remaining = target_rank;
      while (remaining > 0) {
        const int i = rng.uniform_int(0, static_cast<int>(parts.size()) - 1);
        if (ranks[i] < parts[i].max_rank()) {
          ++ranks[i];
          --remaining;
        }
      }
      CVector e = CVector::Zero(d);
      for (std::size_t i = 0; i < parts.size(); ++i)
        e.segment(s.part_offset(i), parts[i].complex_dim()) =
            generate_tripotent(parts[i], ranks[i], rng);
      return e;
    }
  }
  throw std::logic_error("generate_tripotent: unknown factor");
}

}  // namespace

CVector random_tripotent(const TripleSpace& s, int target_rank, Rng& rng, const Tolerance& tol) {
  if (target_rank < 0 || target_rank > s.max_rank())
    throw std::invalid_argument("random_tripotent: infeasible rank");
  const CVector e = generate_tripotent(s, target_rank, rng);
  if (!is_tripotent(s, e, tol))
    throw std::logic_error("random_tripotent: generated candidate failed certification");
  return e;
}

bool is_orthogonal(const TripleSpace& s, const CVector& a, const CVector& b,
                   const Tolerance& tol) {
  const double scale = 1.0 + s.norm(a) * s.norm(b);
  return spectral_norm(box(s, a, b).op) <= tol.algebraic * scale;
}

bool triple_leq(const TripleSpace& s, const CVector& u, const CVector& e, const Tolerance& tol) {
  if (!is_tripotent(s, u, tol) || !is_tripotent(s, e, tol))
    throw std::invalid_argument("triple_leq: arguments must be tripotents");
  const CVector diff = e - u;
  return is_tripotent(s, diff, tol) && is_orthogonal(s, diff, u, tol);
}

std::vector<CVector> random_frame(const TripleSpace& s, Rng& rng, const Tolerance& tol) {
  std::vector<CVector> frame;
  const int d = s.complex_dim();
  switch (s.descriptor().type) {
    case Factor::cartan1: {
      const int m = s.descriptor().rows, n = s.descriptor().cols;
      const CMatrix u = rng.unitary(m), v = rng.unitary(n);
      for (int k = 0; k < s.max_rank(); ++k)
        frame.push_back(s.from_matrix(u.col(k) * v.col(k).adjoint()));
      break;
    }
    case Factor::cartan2: {
      const int n = s.descriptor().n;
      const CMatrix u = rng.unitary(n);
      for (int b = 0; b < s.max_rank(); ++b) {
        const auto c0 = u.col(2 * b), c1 = u.col(2 * b + 1);
        frame.push_back(s.from_matrix(CMatrix(c0 * c1.transpose() - c1 * c0.transpose())));
      }
      break;
    }
    case Factor::cartan3: {
      const int n = s.descriptor().n;
      const CMatrix u = rng.unitary(n);
      for (int k = 0; k < n; ++k) frame.push_back(s.from_matrix(CMatrix(u.col(k) * u.col(k).transpose())));
      break;
    }
    case Factor::spin: {
      const int n = d;
      RMatrix g(n, 2);
      for (int i = 0; i < n; ++i) {
        g(i, 0) = rng.normal();
        g(i, 1) = rng.normal();
      }
      Eigen::HouseholderQR<RMatrix> qr(g);
      RMatrix q = qr.householderQ() * RMatrix::Identity(n, 2);
      CVector e1(n), e2(n);
      for (int i = 0; i < n; ++i) {
        e1(i) = 0.5 * Complex(q(i, 0), q(i, 1));
        e2(i) = 0.5 * Complex(q(i, 0), -q(i, 1));
      }
      frame = {e1, e2};
      break;
    }
    case Factor::sum: {
      for (std::size_t i = 0; i < s.parts().size(); ++i) {
        for (const auto& pe : random_frame(s.parts()[i], rng, tol)) {
          CVector e = CVector::Zero(d);
          e.segment(s.part_offset(i), s.parts()[i].complex_dim()) = pe;
          frame.push_back(e);
        }
      }
      break;
    }
  }
  for (const auto& e : frame)
    if (!is_tripotent(s, e, tol)) throw std::logic_error("random_frame: certification failed");
  return frame;
}

}  // namespace tkk
