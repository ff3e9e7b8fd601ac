#ifndef MIRAHORIC_ARITH_HPP
#define MIRAHORIC_ARITH_HPP

// Exact arithmetic for the base field Q_p: rationals carrying a p-adic
// valuation, matrices over them, the Iwasawa decomposition G = B K and
// reduction of p-integral data modulo p^r.

#include <gmpxx.h>

#include <initializer_list>
#include <limits>
#include <vector>

#include "mirahoric/matrix.hpp"

namespace mirahoric {

using Integer = mpz_class;
using Rational = mpq_class;
using LocalMatrix = Matrix<Rational>;
using ResidueMatrix = Matrix<long>;

// val_p(0).
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational make_rational(long num, long den);

bool is_prime(long n);

// F = Q_p. The uniformizer is p, the residue field has q = p elements and
// residues are represented by {0, ..., p-1}.
class BaseField {
 public:
  explicit BaseField(long p);

  long p() const noexcept { return p_; }
  long q() const noexcept { return p_; }
  std::vector<long> residue_representatives() const;

  // p^r as a machine integer; throws if it does not fit comfortably.
  long modulus(int r) const;

  friend bool operator==(const BaseField& a, const BaseField& b) {
    return a.p_ == b.p_;
  }

 private:
  long p_;
};

long val_p(const Integer& x, long p);
long val_p(const Rational& x, long p);
inline long val_p(const Rational& x, const BaseField& F) { return val_p(x, F.p()); }

LocalMatrix local_zero(std::size_t n);
LocalMatrix local_identity(std::size_t n);
LocalMatrix local_matrix(std::initializer_list<std::initializer_list<Rational>> rows);
LocalMatrix local_matrix(const std::vector<std::vector<long>>& rows);

Rational determinant(const LocalMatrix& g);
// Throws NotInvertible for singular input.
LocalMatrix inverse(const LocalMatrix& g);

bool is_upper_triangular(const LocalMatrix& g);
// Every entry has valuation >= 0.
bool is_integral(const LocalMatrix& g, const BaseField& F);
// Integral with unit determinant, i.e. an element of GL_n(Z_p).
bool in_maximal_compact(const LocalMatrix& g, const BaseField& F);

struct IwasawaDecomposition {
  LocalMatrix beta;       // upper triangular, diagonal entries p^{v_i}
  LocalMatrix k;          // in GL_n(Z_p)
  LocalMatrix k_inverse;  // k^{-1}, also in GL_n(Z_p)
};

// g = beta * k, computed by column Hermite reduction over Z_(p): the last row
// is treated first, its minimal-valuation entry is swapped into the diagonal
// slot, unit-normalized to p^v and used to clear the rest of the row.
IwasawaDecomposition iwasawa(const LocalMatrix& g, const BaseField& F);

// Image in Z/p^r; throws NegativeValuation if x is not p-integral.
long reduce_mod(const Rational& x, const BaseField& F, int r);
ResidueMatrix reduce_mod(const LocalMatrix& g, const BaseField& F, int r);

long mod_floor(long a, long m);
long mod_inverse(long a, long m);  // throws NotInvertible if gcd(a, m) != 1

}  // namespace mirahoric

#endif  // MIRAHORIC_ARITH_HPP
