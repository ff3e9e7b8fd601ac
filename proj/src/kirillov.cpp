#include "mirahoric/kirillov.hpp"

#include <string>

#include "mirahoric/linalg.hpp"
#include "mirahoric/mann.hpp"

namespace mirahoric {

bool is_dominant(const DominantTuple& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    if (i > 0 && m[i] > m[i - 1]) return false;
  }
  return true;
}

std::vector<DominantTuple> dominant_tuples(int n, int M) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (M < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be non-negative");
  std::vector<DominantTuple> out;
  DominantTuple cur;
  const auto rec = [&](auto&& self, int pos, int cap) -> void {
    if (pos == n - 1) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur.push_back(v);
      self(self, pos + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, M);
  return out;
}

TupleVector::TupleVector(int n, int trunc, const CoeffField& field)
    : n_(n), trunc_(trunc), field_(field) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (trunc < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be non-negative");
}

Coeff TupleVector::at(const DominantTuple& m) const {
  const auto it = entries_.find(m);
  return it == entries_.end() ? Coeff::zero(field_) : it->second;
}

void TupleVector::set(const DominantTuple& m, const Coeff& c) {
  if (static_cast<int>(m.size()) != n_ - 1 || !is_dominant(m))
    throw Error(ErrorKind::InvalidArgument, "index is not a dominant tuple");
  if (!m.empty() && m.front() > trunc_)
    throw Error(ErrorKind::InvalidArgument, "index beyond truncation");
  if (c.field() != field_) throw Error(ErrorKind::FieldMismatch, "tuple coefficient field");
  if (c.is_zero())
    entries_.erase(m);
  else
    entries_[m] = c;
}

TupleVector operator+(const TupleVector& a, const TupleVector& b) {
  if (a.n() != b.n() || a.trunc() != b.trunc())
    throw Error(ErrorKind::InvalidArgument, "tuple vectors of different shape");
  TupleVector out = a;
  for (const auto& [m, c] : b.entries()) out.set(m, out.at(m) + c);
  return out;
}

TupleVector scale(const TupleVector& a, const Coeff& c) {
  TupleVector out(a.n(), a.trunc(), a.field());
  for (const auto& [m, v] : a.entries()) out.set(m, v * c);
  return out;
}

TupleVector apply_U_tuple(int j, const TupleVector& a, const BaseField& F) {
  const int n = a.n();
  if (j < 1 || j > n - 1)
    throw Error(ErrorKind::InvalidArgument, "j = " + std::to_string(j) + " out of range");
  const CoeffField& f = a.field();
  const Coeff q(f, F.q());
  struct Term {
    std::vector<int> shift;
    Coeff weight;
  };
  std::vector<Term> terms;
  for (const auto& subset : subsets_colex(n - 1, j)) {
    std::vector<int> shift(static_cast<std::size_t>(n - 1), 0);
    for (int i : subset) shift[static_cast<std::size_t>(i - 1)] = 1;
    terms.push_back({shift, q.pow(subset_exponent(n, subset))});
  }
  TupleVector out(n, a.trunc(), f);
  for (const auto& m : dominant_tuples(n, a.trunc())) {
    Coeff acc = Coeff::zero(f);
    for (const auto& t : terms) {
      DominantTuple target = m;
      for (std::size_t i = 0; i < target.size(); ++i) target[i] += t.shift[i];
      if (!is_dominant(target)) continue;
      acc += t.weight * a.at(target);
    }
    if (!acc.is_zero()) out.set(m, acc);
  }
  return out;
}

TupleVector w_infty(int n, int M, const CoeffField& field) {
  TupleVector w(n, M, field);
  w.set(DominantTuple(static_cast<std::size_t>(n - 1), 0), Coeff::one(field));
  return w;
}

CoeffMatrix tuple_operator_matrix(int n, int j, const BaseField& F, int M,
                                  const CoeffField& field) {
  const auto basis = dominant_tuples(n, M);
  CoeffMatrix out = coeff_zero(basis.size(), basis.size(), field);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    TupleVector e(n, M, field);
    e.set(basis[col], Coeff::one(field));
    const TupleVector image = apply_U_tuple(j, e, F);
    for (std::size_t row = 0; row < basis.size(); ++row) out(row, col) = image.at(basis[row]);
  }
  return out;
}

std::vector<TupleVector> joint_kernel_tuples(int n, const BaseField& F, int M,
                                             const CoeffField& field) {
  const auto basis = dominant_tuples(n, M);
  std::vector<TupleVector> out;
  if (n == 1) {
    out.push_back(w_infty(n, M, field));
    return out;
  }
  std::vector<CoeffMatrix> blocks;
  for (int j = 1; j <= n - 1; ++j) blocks.push_back(tuple_operator_matrix(n, j, F, M, field));
  const CoeffMatrix ker = nullspace(vstack(blocks));
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    TupleVector v(n, M, field);
    for (std::size_t r = 0; r < basis.size(); ++r) v.set(basis[r], ker(r, c));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mirahoric
