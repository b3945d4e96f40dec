#ifndef TKK_SPACE_HPP
#define TKK_SPACE_HPP

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tkk/linalg.hpp"

namespace tkk {

enum class Factor { cartan1, cartan2, cartan3, spin, sum };

/// Shape of a finite-dimensional JB*-triple: a matrix factor, a spin factor
/// on C^n, or a finite sup-norm sum of such factors.
struct Descriptor {
  Factor type = Factor::cartan1;
  int rows = 0, cols = 0;  // cartan1
  int n = 0;               // cartan2, cartan3, spin
  std::vector<Descriptor> parts;  // sum

  static Descriptor cartan1(int m, int n) { return {Factor::cartan1, m, n, 0, {}}; }
  static Descriptor cartan2(int n) { return {Factor::cartan2, 0, 0, n, {}}; }
  static Descriptor cartan3(int n) { return {Factor::cartan3, 0, 0, n, {}}; }
  static Descriptor spin(int n) { return {Factor::spin, 0, 0, n, {}}; }
  static Descriptor sum(std::vector<Descriptor> parts) {
    return {Factor::sum, 0, 0, 0, std::move(parts)};
  }
};

/// A finite-dimensional JB*-triple with a fixed canonical basis. Elements are
/// complex coordinate vectors against that basis. Matrix factors evaluate the
/// product on matrix realizations, the spin factor uses its closed form, sums
/// work coordinatewise on their parts.
class TripleSpace {
 public:
  static TripleSpace make(const Descriptor& d);

  const Descriptor& descriptor() const { return desc_; }
  int complex_dim() const { return dim_; }
  /// Maximal rank of a tripotent in this factor.
  int max_rank() const { return rank_; }
  bool is_sum() const { return desc_.type == Factor::sum; }
  const std::vector<TripleSpace>& parts() const { return parts_; }
  int part_offset(std::size_t i) const { return part_offsets_[i]; }

  CVector basis_element(int k) const;

  /// Triple product {a,b,c}: symmetric linear in a,c, conjugate-linear in b.
  CVector triple(const CVector& a, const CVector& b, const CVector& c) const;

  /// The JB*-triple norm of an element.
  double norm(const CVector& x) const;

  /// Matrix realization for types I-III (throws for spin/sum).
  CMatrix to_matrix(const CVector& x) const;
  CVector from_matrix(const CMatrix& m) const;

  /// Diagonal Gram of the canonical basis for the associative inner product
  /// under which (a box b)^* = b box a.
  const RVector& gram() const { return gram_; }

  /// True when every summand is a factor of rank >= 2.
  bool all_parts_rank_ge2() const;

  bool same_shape(const TripleSpace& other) const;

 private:
  Descriptor desc_;
  int dim_ = 0;
  int rank_ = 0;
  std::vector<TripleSpace> parts_;
  std::vector<int> part_offsets_;
  RVector gram_;

  void check_coords(const CVector& x) const;
  CVector spin_triple(const CVector& a, const CVector& b, const CVector& c) const;
  double spin_norm(const CVector& x) const;
};

nlohmann::json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const CVector& x);
CVector element_from_json(const nlohmann::json& j);

}  // namespace tkk

#endif
