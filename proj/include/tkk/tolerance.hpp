#ifndef TKK_TOLERANCE_HPP
#define TKK_TOLERANCE_HPP

#include <stdexcept>

namespace tkk {

/// Uniform tolerance policy: `algebraic` bounds relative residuals of exact
/// identities, `normative` bounds norm estimations (sampling-based).
struct Tolerance {
  double algebraic = 1e-9;
  double normative = 1e-6;

  Tolerance() = default;
  Tolerance(double alg, double nrm) : algebraic(alg), normative(nrm) { validate(); }

  void validate() const {
    if (!(0 < algebraic && algebraic <= normative && normative < 1))
      throw std::invalid_argument("Tolerance: require 0 < algebraic <= normative < 1");
  }
};

}  // namespace tkk

#endif
