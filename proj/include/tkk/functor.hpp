#ifndef TKK_FUNCTOR_HPP
#define TKK_FUNCTOR_HPP

#include <nlohmann/json_fwd.hpp>

#include "tkk/tkk.hpp"

namespace tkk {

/// A candidate triple isomorphism between two spaces, stored as a real-linear
/// operator on coordinates. The verified flag is set only by in-process
/// verification (verify_triple_map); deserialized maps start unverified.
struct TripleMap {
  const TripleSpace* domain = nullptr;
  const TripleSpace* codomain = nullptr;
  RealLinearOp op;
  bool verified = false;

  CVector apply(const CVector& x) const { return op.apply(x); }
};

TripleMap triple_map_identity(const TripleSpace& s);
TripleMap triple_map_scalar(const TripleSpace& s, Complex lambda);
/// x |-> u x v on a type I factor (u, v unitary).
TripleMap triple_map_unitary(const TripleSpace& s, const TripleSpace& codomain, const CMatrix& u,
                             const CMatrix& v);
/// x |-> x^t from an m x n factor onto the n x m factor.
TripleMap triple_map_transpose(const TripleSpace& domain, const TripleSpace& codomain);
/// Entrywise conjugation in coordinates (conjugate-linear candidate).
TripleMap triple_map_conjugation(const TripleSpace& s);
/// Block-diagonal map between sum spaces from per-part maps.
TripleMap triple_map_direct_sum(const TripleSpace& domain, const TripleSpace& codomain,
                                const std::vector<TripleMap>& parts);

TripleMap compose_triple_maps(const TripleMap& psi, const TripleMap& phi);
TripleMap inverse_triple_map(const TripleMap& phi);

/// Product preservation phi{a,b,c} = {phi a, phi b, phi c} on all basis
/// triples plus seeded random triples, and bijectivity. Sets the verified
/// flag on success.
Report verify_triple_map(TripleMap& phi, int samples, std::uint64_t seed,
                         const Tolerance& tol = Tolerance{});

/// A graded (or negatively graded) real-linear map between TKK algebras.
/// Degree blocks are explicit; the degree-0 action is operator conjugation by
/// t_m1, with generator transport h = sum a_j box b_j |-> sum phi(a_j) box
/// phi(b_j) whenever a generator witness is available.
struct GradedMap {
  const TKKAlgebra* domain = nullptr;
  const TKKAlgebra* codomain = nullptr;
  RealLinearOp t_m1, t_p1;
  bool negatively_graded = false;
  OpKind kind = OpKind::general;
  bool verified = false;

  TKKElement apply(const TKKElement& z) const;
  /// Conjugation t_m1 . h . t_m1^-1; throws when the result fails to be
  /// complex-linear within tolerance.
  V0Element apply_v0(const V0Element& h) const;
};

inline TKKAlgebra f_object(const TripleSpace& s) { return build_tkk(s); }

/// The functor on morphisms: blocks (phi, h |-> phi h phi^-1, phi).
GradedMap f_morphism(const TripleMap& phi, const TKKAlgebra& domain, const TKKAlgebra& codomain);

/// Bracket preservation, involution commuting (theta' T = T theta), grading
/// and bijectivity. Sets verified on success.
Report verify_graded_iso(GradedMap& t, int samples, std::uint64_t seed,
                         const Tolerance& tol = Tolerance{});

/// Max over sampled z of |tkk_norm(T z) - tkk_norm(z)|, with degree-0 norms
/// evaluated on a shared sample set transported through the degree block.
double isometry_residual(const GradedMap& t, int samples, std::uint64_t seed);

/// phi := restriction of T to degree -1; throws when the reconstruction
/// residual max over basis elements of tkk_norm(T z - (F phi) z) exceeds
/// tolerance.
TripleMap recover_triple_map(const GradedMap& t, const Tolerance& tol = Tolerance{});

/// Residuals of F(psi . phi) - F(psi) . F(phi) and F(id) - id on basis
/// elements of the TKK algebras.
Report functor_laws(const TripleMap& phi, const TripleMap& psi, const TKKAlgebra& a0,
                    const TKKAlgebra& a1, const TKKAlgebra& a2,
                    const Tolerance& tol = Tolerance{});

/// For conjugate-linear T: product preservation of the degree -1 block and
/// the isometry residual; throws when T is not conjugate-linear.
Report conjugate_variant_check(const GradedMap& t, int samples, std::uint64_t seed,
                               const Tolerance& tol = Tolerance{});

nlohmann::json triple_map_to_json(const TripleMap& phi);
TripleMap triple_map_from_json(const nlohmann::json& j, const TripleSpace& domain,
                               const TripleSpace& codomain);

}  // namespace tkk

#endif
