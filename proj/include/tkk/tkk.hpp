#ifndef TKK_TKK_HPP
#define TKK_TKK_HPP

#include <Eigen/QR>
#include <memory>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tkk/jordan.hpp"
#include "tkk/report.hpp"

namespace tkk {

/// The 3-graded Lie algebra L(V) = V + V0 + conj(V) of a triple space, with
/// a fixed basis of V0 (independent box operators of basis pairs) and a
/// seeded unit sample set used by the degree-0 norm estimator.
class TKKAlgebra {
 public:
  explicit TKKAlgebra(TripleSpace space);

  const TripleSpace& base() const { return space_; }
  int g0_dim() const { return g0_dim_; }
  bool canonical() const { return true; }  // [g_-1, g_1] spans g_0 by construction

  const std::vector<std::pair<int, int>>& g0_basis_pairs() const { return g0_basis_pairs_; }
  const std::vector<CMatrix>& g0_basis_ops() const { return g0_basis_ops_; }

  /// Coefficients of a V0 operator in the chosen basis (least squares; the
  /// residual is reported through *residual when non-null).
  CVector g0_coordinates(const CMatrix& h, double* residual = nullptr) const;

  /// Fixed unit sample set for the sampling lower-bound norm estimator.
  const std::vector<CVector>& norm_samples() const { return norm_samples_; }

 private:
  TripleSpace space_;
  int g0_dim_ = 0;
  std::vector<std::pair<int, int>> g0_basis_pairs_;
  std::vector<CMatrix> g0_basis_ops_;
  CMatrix g0_span_;  // d^2 x g0_dim, vectorized basis ops
  Eigen::ColPivHouseholderQR<CMatrix> g0_solver_;
  std::vector<CVector> norm_samples_;
};

/// A graded element (x, h, y) with x of degree -1, h in V0 and y of degree 1
/// (the conjugate copy of the base space).
struct TKKElement {
  const TKKAlgebra* algebra = nullptr;
  CVector x;
  V0Element h;
  CVector y;

  static TKKElement zero(const TKKAlgebra& alg);
  static TKKElement embed_m1(const TKKAlgebra& alg, const CVector& x);
  static TKKElement embed_p1(const TKKAlgebra& alg, const CVector& y);
  static TKKElement embed_h(const TKKAlgebra& alg, const V0Element& h);
  static TKKElement make(const TKKAlgebra& alg, const CVector& x, const V0Element& h,
                         const CVector& y);

  TKKElement operator+(const TKKElement& o) const;
  TKKElement operator-(const TKKElement& o) const;
  TKKElement scaled(double r) const;
};

inline TKKAlgebra build_tkk(const TripleSpace& s) { return TKKAlgebra(s); }

/// Lie bracket [(x,h,y),(u,k,v)] = (h(u)-k(x), [h,k]+x box v-u box y,
/// nat(k)(y)-nat(h)(v)).
TKKElement bracket(const TKKElement& z, const TKKElement& w);

/// The negatively graded involution theta(x,h,y) = (y, -nat(h), x).
TKKElement theta(const TKKElement& z);

/// Sampling lower-bound estimate of the operator norm of h induced by the
/// triple norm (max over the algebra's fixed unit sample set).
double v0_norm(const TKKAlgebra& alg, const V0Element& h);

/// Sum norm |x| + |h| + |y|.
double tkk_norm(const TKKElement& z);

double jacobi_residual(const TKKElement& z1, const TKKElement& z2, const TKKElement& z3);

/// Matrix of w |-> [z,w] in the concatenated real coordinates of L(V)
/// (degree -1 coords, V0 basis coefficients, degree 1 coords).
RealLinearOp ad(const TKKElement& z);

/// |  |[[a,theta a],a]|  - 1 | for a unit a of degree -1.
double condition_a_residual(const TKKAlgebra& alg, const CVector& a);

/// Smallest singular value of I - ad[a, theta a] restricted to degree -1.
double condition_c_singularity(const TKKAlgebra& alg, const CVector& a);

/// Structural report: gradedness, triple-vs-bracket law, theta as bracket
/// automorphism, theta^2 = id, alternating brackets, and the smallest
/// observed constant for the norm bound on brackets.
Report structural_checks(const TKKAlgebra& alg, int samples, std::uint64_t seed,
                         const Tolerance& tol = Tolerance{});

/// Random element generators used across the verification suites.
CVector random_element(const TripleSpace& s, Rng& rng);
CVector random_unit(const TripleSpace& s, Rng& rng);
V0Element random_v0(const TKKAlgebra& alg, Rng& rng, int generators = 2);
TKKElement random_tkk_element(const TKKAlgebra& alg, Rng& rng);

nlohmann::json tkk_element_to_json(const TKKElement& z);
TKKElement tkk_element_from_json(const TKKAlgebra& alg, const nlohmann::json& j);

}  // namespace tkk

#endif
