#ifndef MIRAHORIC_KIRILLOV_HPP
#define MIRAHORIC_KIRILLOV_HPP

// Coordinates W -> (W(rho_m))_m of mirabolic-invariant Whittaker functions,
// indexed by dominant tuples m_1 >= ... >= m_{n-1} >= 0, and the action of
// the operators U^(j) on them. Vectors live on the truncated cone m_1 <= M;
// coefficients beyond the truncation read as zero.

#include <map>
#include <vector>

#include "mirahoric/coeff.hpp"

namespace mirahoric {

using DominantTuple = std::vector<int>;

bool is_dominant(const DominantTuple& m);

// All dominant tuples of length n-1 with m_1 <= M, lexicographic order.
std::vector<DominantTuple> dominant_tuples(int n, int M);

class TupleVector {
 public:
  TupleVector(int n, int trunc, const CoeffField& field);

  int n() const noexcept { return n_; }
  int trunc() const noexcept { return trunc_; }
  const CoeffField& field() const noexcept { return field_; }
  const std::map<DominantTuple, Coeff>& entries() const noexcept { return entries_; }

  // Zero outside the support (including beyond the truncation).
  Coeff at(const DominantTuple& m) const;
  // Throws for non-dominant or out-of-truncation indices; zero prunes.
  void set(const DominantTuple& m, const Coeff& c);
  bool is_zero() const noexcept { return entries_.empty(); }

  friend bool operator==(const TupleVector& a, const TupleVector& b) {
    return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
  }

 private:
  int n_;
  int trunc_;
  CoeffField field_;
  std::map<DominantTuple, Coeff> entries_;
};

TupleVector operator+(const TupleVector& a, const TupleVector& b);
TupleVector scale(const TupleVector& a, const Coeff& c);

// (U^(j) a)_m = sum over |I| = j, I in {1..n-1}, of q^{e(I)} a_{m + e_I}.
TupleVector apply_U_tuple(int j, const TupleVector& a, const BaseField& F);

// delta at m = 0.
TupleVector w_infty(int n, int M, const CoeffField& field);

// Basis of the joint kernel of U^(1..n-1) on vectors supported in m_1 <= M.
std::vector<TupleVector> joint_kernel_tuples(int n, const BaseField& F, int M,
                                             const CoeffField& field);

// Matrix of U^(j) on the truncated cone in the dominant_tuples(n, M) basis.
CoeffMatrix tuple_operator_matrix(int n, int j, const BaseField& F, int M,
                                  const CoeffField& field);

}  // namespace mirahoric

#endif  // MIRAHORIC_KIRILLOV_HPP
