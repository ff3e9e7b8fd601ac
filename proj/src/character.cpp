#include "mirahoric/character.hpp"

namespace mirahoric {

UnramifiedChar::UnramifiedChar(std::vector<Coeff> values, bool normalized)
    : values_(std::move(values)), normalized_(normalized) {
  if (values_.empty()) throw Error(ErrorKind::InvalidArgument, "character of rank 0");
  for (const Coeff& c : values_) {
    if (c.field() != values_.front().field())
      throw Error(ErrorKind::FieldMismatch, "character values live in different fields");
    if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "character value must be nonzero");
  }
}

UnramifiedChar UnramifiedChar::trivial(int n, const CoeffField& field) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  return UnramifiedChar(std::vector<Coeff>(static_cast<std::size_t>(n), Coeff::one(field)));
}

int normalization_twist_twice(int n, int i) { return -(n + 1 - 2 * i); }

std::vector<Coeff> UnramifiedChar::effective_values(const BaseField& F) const {
  if (!normalized_) return values_;
  const CoeffField& f = field();
  const Coeff q(f, F.q());
  if (q.is_zero())
    throw Error(ErrorKind::NoHalfPowers, "q vanishes in " + f.name());
  Coeff root = Coeff::one(f);
  if (n() % 2 == 0) {
    const auto s = q.sqrt();
    if (!s)
      throw Error(ErrorKind::NoHalfPowers,
                  "q^(1/2) does not lie in " + f.name() + "; normalized mode unavailable");
    root = *s;
  }
  std::vector<Coeff> out;
  out.reserve(values_.size());
  for (int i = 1; i <= n(); ++i) {
    const int twice = normalization_twist_twice(n(), i);
    // n even: every exponent is a half-integer; n odd: every exponent is integral.
    const Coeff factor = n() % 2 == 0 ? root.pow(twice) : q.pow(twice / 2);
    out.push_back(values_[static_cast<std::size_t>(i - 1)] * factor);
  }
  return out;
}

Coeff chi_eval(const UnramifiedChar& chi, const LocalMatrix& beta, const BaseField& F) {
  if (!beta.is_square() || beta.rows() != static_cast<std::size_t>(chi.n()))
    throw Error(ErrorKind::InvalidArgument, "chi_eval: rank mismatch");
  if (!is_upper_triangular(beta))
    throw Error(ErrorKind::InvalidArgument, "chi_eval: beta must be upper triangular");
  const auto values = chi.effective_values(F);
  Coeff acc = Coeff::one(chi.field());
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    if (beta(i, i) == 0)
      throw Error(ErrorKind::NotInvertible, "chi_eval: zero on the diagonal");
    const long v = val_p(beta(i, i), F);
    if (v != 0) acc *= values[i].pow(v);
  }
  return acc;
}

}  // namespace mirahoric
