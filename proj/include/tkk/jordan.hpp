#ifndef TKK_JORDAN_HPP
#define TKK_JORDAN_HPP

#include <array>
#include <utility>
#include <vector>

#include "tkk/linalg.hpp"
#include "tkk/rng.hpp"
#include "tkk/space.hpp"
#include "tkk/tolerance.hpp"

namespace tkk {

/// An element of the span of box operators a box b : x |-> {a,b,x}.
/// Equality of V0Elements is equality of the operator matrix; the generator
/// list is a witness and may be absent for operators obtained indirectly.
struct V0Element {
  const TripleSpace* space = nullptr;
  std::vector<std::pair<CVector, CVector>> generators;
  bool has_generators = false;
  CMatrix op;  // complex d x d matrix on coordinates

  static V0Element zero(const TripleSpace& s) {
    V0Element h;
    h.space = &s;
    h.has_generators = true;
    h.op = CMatrix::Zero(s.complex_dim(), s.complex_dim());
    return h;
  }
};

/// Box operator a box b with generator witness [(a,b)].
V0Element box(const TripleSpace& s, const CVector& a, const CVector& b);

/// The involutive conjugate-linear map sending sum a_j box b_j to
/// sum b_j box a_j. Falls back to the Gram-weighted adjoint when the
/// operand carries no generator witness.
V0Element natural(const V0Element& h);

/// Norm of the residual of the five-term triple product identity.
double jordan_identity_residual(const TripleSpace& s, const CVector& a, const CVector& b,
                                const CVector& x, const CVector& y, const CVector& z);

/// Conjugate-linear operator x |-> {e,x,e}.
RealLinearOp q_operator(const TripleSpace& s, const CVector& e);

bool is_tripotent(const TripleSpace& s, const CVector& e, const Tolerance& tol = Tolerance{});

struct PeirceDecomposition {
  CVector tripotent;
  RealLinearOp p2, p1, p0;   // complex-linear projections
  std::array<int, 3> dims;   // (d2, d1, d0)
};

/// Peirce projections of a tripotent: P2 = Q(e)^2, P1 = 2(e box e - Q^2),
/// P0 = I - 2 e box e + Q^2.
PeirceDecomposition peirce(const TripleSpace& s, const CVector& e,
                           const Tolerance& tol = Tolerance{});

/// Seeded tripotent of the requested rank; always post-validated through
/// is_tripotent. Generation is per-factor (partial isometries for type I,
/// symmetric/antisymmetric frames for II/III, algebraic candidates for spin).
CVector random_tripotent(const TripleSpace& s, int target_rank, Rng& rng,
                         const Tolerance& tol = Tolerance{});

bool is_orthogonal(const TripleSpace& s, const CVector& a, const CVector& b,
                   const Tolerance& tol = Tolerance{});

/// u <= e in the tripotent order: e - u is a tripotent orthogonal to u.
bool triple_leq(const TripleSpace& s, const CVector& u, const CVector& e,
                const Tolerance& tol = Tolerance{});

/// A frame of pairwise orthogonal rank-one tripotents (up to max_rank).
std::vector<CVector> random_frame(const TripleSpace& s, Rng& rng,
                                  const Tolerance& tol = Tolerance{});

}  // namespace tkk

#endif
