#ifndef MIRAHORIC_CHARACTER_HPP
#define MIRAHORIC_CHARACTER_HPP

#include <vector>

#include "mirahoric/coeff.hpp"

namespace mirahoric {

// Unramified character of the diagonal torus, given by the values c_i of
// chi_i at the uniformizer. With `normalized` set, c_i is first twisted by
// the square root of the modulus character, so eigenvalues come out in the
// normalized-induction coordinates.
class UnramifiedChar {
 public:
  // Throws if the list is empty, a value is zero, or fields differ.
  explicit UnramifiedChar(std::vector<Coeff> values, bool normalized = false);

  static UnramifiedChar trivial(int n, const CoeffField& field);

  int n() const noexcept { return static_cast<int>(values_.size()); }
  const CoeffField& field() const noexcept { return values_.front().field(); }
  const std::vector<Coeff>& values() const noexcept { return values_; }
  bool normalized() const noexcept { return normalized_; }

  // The values actually used by chi_eval. Throws NoHalfPowers in normalized
  // mode when n is even and q has no square root in the coefficient field.
  std::vector<Coeff> effective_values(const BaseField& F) const;

 private:
  std::vector<Coeff> values_;
  bool normalized_;
};

// Twice the exponent of q applied to c_i (1-based i) in normalized mode.
int normalization_twist_twice(int n, int i);

// chi(beta) = prod_i c_i^{val_p(beta_ii)} for upper-triangular beta.
Coeff chi_eval(const UnramifiedChar& chi, const LocalMatrix& beta, const BaseField& F);

}  // namespace mirahoric

#endif  // MIRAHORIC_CHARACTER_HPP
