#ifndef MIRAHORIC_LINALG_HPP
#define MIRAHORIC_LINALG_HPP

// Exact linear algebra over Q and F_ell: echelon forms, kernels, polynomials,
// characteristic and minimal polynomials, roots in the base field and
// Jordan types from rank sequences.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mirahoric/coeff.hpp"

namespace mirahoric {

class Polynomial {
 public:
  explicit Polynomial(const CoeffField& field);  // zero polynomial
  // Coefficients from the constant term upwards; trailing zeros are pruned.
  Polynomial(const CoeffField& field, std::vector<Coeff> coeffs);

  static Polynomial constant(const Coeff& c);
  static Polynomial x_minus(const Coeff& root);

  const CoeffField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  Coeff coeff(int k) const;
  Coeff leading() const;

  Coeff eval(const Coeff& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // Human-readable, e.g. "x^3 - 4*x^2 + 3*x".
  std::string to_string() const;

 private:
  void prune();

  CoeffField field_;
  std::vector<Coeff> coeffs_;
};

// (quotient, remainder); throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// p(M) by Horner's rule.
CoeffMatrix eval(const Polynomial& p, const CoeffMatrix& m);

struct Root {
  Coeff value;
  int multiplicity = 0;
};

// Roots lying in the base field with multiplicities, in increasing order
// (by value over Q, by residue over F_ell). Over Q rational roots are found
// exactly by Sturm-sequence bisection on an integral rescaling.
std::vector<Root> roots_in_field(const Polynomial& p);

// Sum of root multiplicities equals the degree.
bool splits(const Polynomial& p);

struct RowEchelon {
  CoeffMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const CoeffMatrix& m);
std::size_t rank(const CoeffMatrix& m);
// Columns form a basis of {v : m v = 0}, one vector per free column, in the
// order of the free columns; each basis vector has a 1 in its free slot.
CoeffMatrix nullspace(const CoeffMatrix& m);

CoeffMatrix vstack(std::span<const CoeffMatrix> blocks);
CoeffMatrix hstack(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix matrix_power(const CoeffMatrix& m, std::size_t k);
CoeffMatrix column_vector(const CoeffVector& v);

// span(small) is contained in span(big); both given by columns.
bool column_span_contains(const CoeffMatrix& big, const CoeffMatrix& small);

// Characteristic polynomial det(x I - M), via reduction to upper Hessenberg
// form by similarity.
Polynomial char_poly(const CoeffMatrix& m);
Polynomial minimal_poly(const CoeffMatrix& m);

// Diagonalizable over an algebraic closure: the minimal polynomial is
// squarefree.
bool is_semisimple(const CoeffMatrix& m);

bool commute(const CoeffMatrix& a, const CoeffMatrix& b);

// Block sizes of the Jordan form at mu, in decreasing order; empty when mu is
// not an eigenvalue.
std::vector<int> jordan_type(const CoeffMatrix& m, const Coeff& mu);

}  // namespace mirahoric

#endif  // MIRAHORIC_LINALG_HPP
