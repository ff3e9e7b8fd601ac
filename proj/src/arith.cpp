#include "mirahoric/arith.hpp"

#include <numeric>
#include <string>

namespace mirahoric {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseField::BaseField(long p) : p_(p) {
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, "base field prime must be prime, got " + std::to_string(p));
}

std::vector<long> BaseField::residue_representatives() const {
  std::vector<long> z(static_cast<std::size_t>(p_));
  std::iota(z.begin(), z.end(), 0L);
  return z;
}

long BaseField::modulus(int r) const {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "level must be non-negative");
  long m = 1;
  for (int i = 0; i < r; ++i) {
    if (m > (1L << 40) / p_)
      throw Error(ErrorKind::BudgetExceeded, "p^r too large for residue arithmetic");
    m *= p_;
  }
  return m;
}

long val_p(const Integer& x, long p) {
  if (x == 0) return kValuationInfinity;
  Integer t = abs(x);
  long v = 0;
  const Integer pp = p;
  while (mpz_divisible_p(t.get_mpz_t(), pp.get_mpz_t())) {
    t /= pp;
    ++v;
  }
  return v;
}

long val_p(const Rational& x, long p) {
  if (x == 0) return kValuationInfinity;
  return val_p(Integer(x.get_num()), p) - val_p(Integer(x.get_den()), p);
}

LocalMatrix local_zero(std::size_t n) { return LocalMatrix(n, n, Rational(0)); }

LocalMatrix local_identity(std::size_t n) {
  return LocalMatrix::identity(n, Rational(0), Rational(1));
}

LocalMatrix local_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t n = rows.size();
  LocalMatrix g(n, n, Rational(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "local_matrix: not square");
    std::size_t j = 0;
    for (const auto& x : row) {
      g(i, j) = x;
      g(i, j++).canonicalize();
    }
    ++i;
  }
  return g;
}

LocalMatrix local_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  LocalMatrix g(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::InvalidArgument, "local_matrix: not square");
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(rows[i][j]);
  }
  return g;
}

Rational determinant(const LocalMatrix& g) {
  if (!g.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant: not square");
  LocalMatrix a = g;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      a.swap_rows(piv, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

LocalMatrix inverse(const LocalMatrix& g) {
  if (!g.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse: not square");
  const std::size_t n = g.rows();
  LocalMatrix a = g;
  LocalMatrix inv = local_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::NotInvertible, "inverse: singular matrix");
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    const Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_upper_triangular(const LocalMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < i && j < g.cols(); ++j)
      if (g(i, j) != 0) return false;
  return true;
}

bool is_integral(const LocalMatrix& g, const BaseField& F) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (val_p(g(i, j), F) < 0) return false;
  return true;
}

bool in_maximal_compact(const LocalMatrix& g, const BaseField& F) {
  return g.is_square() && is_integral(g, F) && val_p(determinant(g), F) == 0;
}

IwasawaDecomposition iwasawa(const LocalMatrix& g, const BaseField& F) {
  if (!g.is_square()) throw Error(ErrorKind::InvalidArgument, "iwasawa: not square");
  const std::size_t n = g.rows();
  LocalMatrix work = g;
  LocalMatrix u = local_identity(n);  // g * u = work throughout

  for (std::size_t step = n; step-- > 0;) {
    std::size_t pivot = n;
    long best = kValuationInfinity;
    for (std::size_t c = 0; c <= step; ++c) {
      const long v = val_p(work(step, c), F);
      if (v < best) {
        best = v;
        pivot = c;
      }
    }
    if (pivot == n) throw Error(ErrorKind::NotInvertible, "iwasawa: singular matrix");
    work.swap_columns(pivot, step);
    u.swap_columns(pivot, step);

    // Scale the pivot column by a unit so the pivot becomes p^best.
    Rational target = 1;
    const Rational pr(F.p());
    for (long e = 0; e < (best < 0 ? -best : best); ++e) target *= pr;
    if (best < 0) target = 1 / target;
    const Rational scale = target / work(step, step);
    for (std::size_t i = 0; i < n; ++i) {
      work(i, step) *= scale;
      u(i, step) *= scale;
    }

    for (std::size_t c = 0; c < step; ++c) {
      if (work(step, c) == 0) continue;
      const Rational f = work(step, c) / work(step, step);
      for (std::size_t i = 0; i < n; ++i) {
        work(i, c) -= f * work(i, step);
        u(i, c) -= f * u(i, step);
      }
    }
  }
  IwasawaDecomposition out{work, inverse(u), u};
  return out;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mod_inverse(long a, long m) {
  long r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const long qt = r0 / r1;
    long t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw Error(ErrorKind::NotInvertible, "residue is not invertible");
  return mod_floor(s0, m);
}

long reduce_mod(const Rational& x, const BaseField& F, int r) {
  const long m = F.modulus(r);
  if (x == 0) return 0;
  if (val_p(x, F) < 0)
    throw Error(ErrorKind::NegativeValuation, "reduce_mod: entry has negative valuation");
  const Integer mm = m;
  Integer num = x.get_num();
  Integer den = x.get_den();
  num %= mm;
  den %= mm;
  const long nr = mod_floor(num.get_si(), m);
  const long dr = mod_floor(den.get_si(), m);
  return static_cast<long>((static_cast<__int128>(nr) * mod_inverse(dr, m)) % m);
}

ResidueMatrix reduce_mod(const LocalMatrix& g, const BaseField& F, int r) {
  ResidueMatrix out(g.rows(), g.cols(), 0L);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = reduce_mod(g(i, j), F, r);
  return out;
}

}  // namespace mirahoric
