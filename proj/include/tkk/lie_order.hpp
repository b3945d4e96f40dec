#ifndef TKK_LIE_ORDER_HPP
#define TKK_LIE_ORDER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tkk/functor.hpp"
#include "tkk/tkk.hpp"

namespace tkk {

/// Certificate for the Lie-level tripotent predicates. Raw residuals are kept
/// so thresholds can be re-evaluated without recomputation.
struct LieTripotentCert {
  TKKElement element;
  bool in_gpm1 = false;
  bool is_tripotent = false;
  bool is_strict = false;
  std::map<std::string, double> residuals;
};

/// Graded component P_j(z) embedded back into the algebra, j in {-1,0,1}.
TKKElement p_component(const TKKElement& z, int j);

/// Tripotency [[z, theta z], z] = z.
LieTripotentCert is_lie_tripotent(const TKKAlgebra& alg, const TKKElement& z,
                                  const Tolerance& tol = Tolerance{});

/// Strictness: z in g_{+-1} and [[P_j z, theta P_j z], P_j z] = P_j z for
/// j = -1, 1, on top of tripotency.
LieTripotentCert is_strict(const TKKAlgebra& alg, const TKKElement& z,
                           const Tolerance& tol = Tolerance{});

/// [P_j z, theta P_j w] = 0 for j = -1, 1; throws when either argument has a
/// nonzero degree-0 part.
bool lie_orthogonal(const TKKAlgebra& alg, const TKKElement& z, const TKKElement& w,
                    const Tolerance& tol = Tolerance{});

/// z <= w: w - z strict and orthogonal to z; throws unless both are strict.
bool lie_leq(const TKKAlgebra& alg, const TKKElement& z, const TKKElement& w,
             const Tolerance& tol = Tolerance{});

/// (P_{-1} z, P_1 z), both certified strict; throws when z fails the
/// strictness identities.
std::pair<TKKElement, TKKElement> strict_decompose(const TKKAlgebra& alg, const TKKElement& z,
                                                   const Tolerance& tol = Tolerance{});

/// P_j(z) + theta P_j(w) for strict orthogonal z, w; certified strict.
TKKElement mix(const TKKAlgebra& alg, const TKKElement& z, const TKKElement& w, int j,
               const Tolerance& tol = Tolerance{});

/// Residual of the five-term bracket identity on degree-j components.
double tkk_jordan_identity_residual(const TKKAlgebra& alg, const TKKElement& a,
                                    const TKKElement& b, const TKKElement& x, const TKKElement& y,
                                    const TKKElement& z, int j);

/// Residual of the companion three-argument identity.
double tkk_jordan_identity2_residual(const TKKAlgebra& alg, const TKKElement& x,
                                     const TKKElement& y, const TKKElement& a, int j);

/// Agreement of triple-level and Lie-level tripotency, orthogonality and
/// order for sampled tripotents embedded at degree -1.
Report cross_check(const TripleSpace& space, int sample_size, std::uint64_t seed,
                   const Tolerance& tol = Tolerance{});

/// Every order/orthogonality lemma instantiated on generated strict
/// tripotents; each record counts the non-vacuous instances it exercised.
Report lemma_suite(const TKKAlgebra& alg, int sample_size, std::uint64_t seed,
                   const Tolerance& tol = Tolerance{});

struct HasseDiagram {
  int nodes = 0;
  std::vector<std::vector<bool>> closure;      // closure[i][j] = (i <= j)
  std::vector<std::pair<int, int>> edges;      // covering pairs
};

/// Pairwise order closure with transitive reduction; validates the
/// partial-order axioms on the closure and throws with a witness otherwise.
HasseDiagram build_poset(const TKKAlgebra& alg, const std::vector<TKKElement>& tripotents,
                         const Tolerance& tol = Tolerance{});

std::string hasse_to_dot(const HasseDiagram& h);

/// Extension of an order isomorphism realized as the restriction of a
/// supplied real-linear triple isomorphism phi between sums of rank >= 2
/// factors. Verification results are appended to *out when non-null.
GradedMap extend_order_iso(const TripleMap& phi, const TKKAlgebra& alg_v,
                           const TKKAlgebra& alg_w, Report* out = nullptr,
                           const Tolerance& tol = Tolerance{});

/// theta' composed with extend_order_iso: the negatively graded variant.
GradedMap negatively_graded_extend(const TripleMap& phi, const TKKAlgebra& alg_v,
                                   const TKKAlgebra& alg_w, Report* out = nullptr,
                                   const Tolerance& tol = Tolerance{});

/// Generators for the lemma and cross-check suites: strict tripotents of the
/// form (u, 0, conj-embedded v) built from frames, plus ordered pairs from
/// partial sums of a frame.
std::vector<TKKElement> sample_strict_tripotents(const TKKAlgebra& alg, Rng& rng, int count,
                                                 const Tolerance& tol = Tolerance{});
std::vector<std::pair<TKKElement, TKKElement>> sample_ordered_pairs(const TKKAlgebra& alg,
                                                                    Rng& rng, int count,
                                                                    const Tolerance& tol = Tolerance{});
std::vector<std::pair<TKKElement, TKKElement>> sample_orthogonal_pairs(const TKKAlgebra& alg,
                                                                       Rng& rng, int count,
                                                                       const Tolerance& tol = Tolerance{});

}  // namespace tkk

#endif
