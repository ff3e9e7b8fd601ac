#ifndef MIRAHORIC_COEFF_HPP
#define MIRAHORIC_COEFF_HPP

// Coefficient scalars: either exact rationals (standing in for the
// characteristic-zero coefficient field) or residues in F_ell.

#include <optional>
#include <string>

#include "mirahoric/arith.hpp"

namespace mirahoric {

class CoeffField {
 public:
  CoeffField() = default;  // Q

  static CoeffField rationals() { return CoeffField(); }
  // Throws NotPrime unless ell is prime.
  static CoeffField prime(long ell);

  bool is_rational() const noexcept { return ell_ == 0; }
  long characteristic() const noexcept { return ell_; }
  std::string name() const;  // "Q" or "F_<ell>"

  friend bool operator==(const CoeffField& a, const CoeffField& b) {
    return a.ell_ == b.ell_;
  }
  friend bool operator!=(const CoeffField& a, const CoeffField& b) { return !(a == b); }

 private:
  long ell_ = 0;
};

class Coeff {
 public:
  Coeff() = default;  // 0 in Q
  Coeff(const CoeffField& field, const Rational& value);
  Coeff(const CoeffField& field, long value);

  static Coeff zero(const CoeffField& f) { return Coeff(f, 0L); }
  static Coeff one(const CoeffField& f) { return Coeff(f, 1L); }

  // "7/3" or "-2" over Q, "5 mod 11" over F_11. A bare integer or fraction is
  // read into `field`; an explicit "a mod ell" must agree with it.
  static Coeff parse(const std::string& text, const CoeffField& field);

  const CoeffField& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const;  // Q only
  long residue() const;              // F_ell only

  Coeff inverse() const;
  Coeff pow(long e) const;

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  Coeff operator-() const;

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::string to_string() const;

  // Reduction Q -> F_ell; requires the denominator to be prime to ell.
  Coeff reduce_to(const CoeffField& target) const;

  // A square root in the same field if one exists (smallest residue mod ell).
  std::optional<Coeff> sqrt() const;

 private:
  void check_same_field(const Coeff& o) const;

  CoeffField field_;
  Rational q_ = 0;
  long r_ = 0;
};

using CoeffMatrix = Matrix<Coeff>;
using CoeffVector = std::vector<Coeff>;

CoeffMatrix coeff_zero(std::size_t rows, std::size_t cols, const CoeffField& f);
CoeffMatrix coeff_identity(std::size_t n, const CoeffField& f);
CoeffMatrix reduce_to(const CoeffMatrix& m, const CoeffField& target);

}  // namespace mirahoric

#endif  // MIRAHORIC_COEFF_HPP
