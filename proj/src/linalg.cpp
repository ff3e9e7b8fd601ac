#include "mirahoric/linalg.hpp"

#include <algorithm>
#include <functional>

namespace mirahoric {

// ---- Polynomial ----------------------------------------------------------

Polynomial::Polynomial(const CoeffField& field) : field_(field) {}

Polynomial::Polynomial(const CoeffField& field, std::vector<Coeff> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Coeff& c : coeffs_)
    if (c.field() != field_) throw Error(ErrorKind::FieldMismatch, "polynomial coefficient field");
  prune();
}

Polynomial Polynomial::constant(const Coeff& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x_minus(const Coeff& root) {
  return Polynomial(root.field(), {-root, Coeff::one(root.field())});
}

void Polynomial::prune() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Coeff Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Coeff::zero(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Coeff Polynomial::leading() const {
  return is_zero() ? Coeff::zero(field_) : coeffs_.back();
}

Coeff Polynomial::eval(const Coeff& x) const {
  Coeff acc = Coeff::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Coeff> d;
  for (int k = 1; k <= degree(); ++k)
    d.push_back(coeffs_[static_cast<std::size_t>(k)] * Coeff(field_, static_cast<long>(k)));
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Coeff inv = leading().inverse();
  std::vector<Coeff> c = coeffs_;
  for (Coeff& x : c) x *= inv;
  return Polynomial(field_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Coeff> c;
  for (std::size_t k = 0; k < len; ++k)
    c.push_back(a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k)));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Coeff> c;
  for (std::size_t k = 0; k < len; ++k)
    c.push_back(a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k)));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(a.field_, std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Coeff& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (field_.is_rational()) {
      Rational v = c.rational();
      negative = v < 0;
      if (negative) v = -v;
      body = v == 1 && k > 0 ? "" : v.get_str();
    } else {
      body = c.is_one() && k > 0 ? "" : std::to_string(c.residue());
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string term = body.empty() ? mono : (mono.empty() ? body : body + "*" + mono);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
  }
  if (!field_.is_rational()) out += " (mod " + std::to_string(field_.characteristic()) + ")";
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const CoeffField& f = a.field();
  std::vector<Coeff> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<Coeff> quo(static_cast<std::size_t>(a.degree() - db + 1), Coeff::zero(f));
  const Coeff inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Coeff t = rem[static_cast<std::size_t>(k)] * inv;
    quo[static_cast<std::size_t>(k - db)] = t;
    if (t.is_zero()) continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

CoeffMatrix eval(const Polynomial& p, const CoeffMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "eval: matrix not square");
  CoeffMatrix acc = coeff_zero(m.rows(), m.cols(), p.field());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    const Coeff c = p.coeff(k);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c;
  }
  return acc;
}

// ---- roots ---------------------------------------------------------------

namespace {

using RationalPoly = std::vector<Rational>;  // low to high

void prune(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly rem(RationalPoly a, const RationalPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational t = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= t * b[i];
    a.pop_back();
    prune(a);
  }
  return a;
}

int sign_at(const RationalPoly& p, const Integer& x) {
  Rational acc = 0;
  const Rational xr(x);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xr + *it;
  return sgn(acc);
}

int variations(const std::vector<RationalPoly>& chain, const Integer& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Integer roots of a squarefree integral polynomial g (monic), increasing.
std::vector<Integer> integer_roots(const RationalPoly& g) {
  std::vector<Integer> roots;
  if (g.size() <= 1) return roots;
  std::vector<RationalPoly> chain{g};
  RationalPoly d;
  for (std::size_t k = 1; k < g.size(); ++k) d.push_back(g[k] * static_cast<long>(k));
  prune(d);
  while (!d.empty()) {
    chain.push_back(d);
    RationalPoly r = rem(chain[chain.size() - 2], chain.back());
    for (Rational& x : r) x = -x;
    d = std::move(r);
  }
  Integer bound = 1;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    const Integer a = abs(g[k].get_num());  // g is integral
    if (a + 1 > bound) bound = a + 1;
  }
  // Roots lie in (-bound, bound); count distinct roots in (lo, hi].
  std::function<void(const Integer&, int, const Integer&, int)> search =
      [&](const Integer& lo, int vlo, const Integer& hi, int vhi) {
        if (vlo - vhi <= 0) return;
        if (hi - lo == 1) {
          if (sign_at(g, hi) == 0) roots.push_back(hi);
          return;
        }
        Integer mid = lo + (hi - lo) / 2;
        const int vmid = variations(chain, mid);
        search(lo, vlo, mid, vmid);
        search(mid, vmid, hi, vhi);
      };
  const Integer lo = -bound - 1, hi = bound;
  search(lo, variations(chain, lo), hi, variations(chain, hi));
  return roots;
}

std::vector<Root> rational_roots(const Polynomial& p) {
  std::vector<Root> out;
  if (p.degree() < 1) return out;
  const CoeffField f = p.field();
  const Polynomial s = divmod(p, gcd(p, p.derivative())).first.monic();

  Integer denom_lcm = 1;
  for (const Coeff& c : s.coeffs()) {
    const Integer den = c.rational().get_den();
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), den.get_mpz_t());
  }
  // g(y) = D^d s(y / D) is monic and integral; its integer roots are D * roots.
  const int d = s.degree();
  RationalPoly g(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), denom_lcm.get_mpz_t(), static_cast<unsigned long>(d - k));
    g[static_cast<std::size_t>(k)] = s.coeff(k).rational() * Rational(scale);
  }

  for (const Integer& y : integer_roots(g)) {
    const Coeff root(f, Rational(y, denom_lcm));
    Polynomial rest = p;
    int mult = 0;
    const Polynomial lin = Polynomial::x_minus(root);
    while (true) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.push_back({root, mult});
  }
  return out;
}

}  // namespace

std::vector<Root> roots_in_field(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const CoeffField& f = p.field();
  if (f.is_rational()) return rational_roots(p);
  std::vector<Root> out;
  for (long a = 0; a < f.characteristic(); ++a) {
    const Coeff root(f, a);
    if (!p.eval(root).is_zero()) continue;
    Polynomial rest = p;
    int mult = 0;
    const Polynomial lin = Polynomial::x_minus(root);
    while (rest.degree() >= 1) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.push_back({root, mult});
  }
  return out;
}

bool splits(const Polynomial& p) {
  int total = 0;
  for (const Root& r : roots_in_field(p)) total += r.multiplicity;
  return total == p.degree();
}

// ---- matrices ------------------------------------------------------------

RowEchelon rref(const CoeffMatrix& m) {
  RowEchelon out{m, {}};
  CoeffMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, row);
    const Coeff inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Coeff f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const CoeffMatrix& m) { return rref(m).pivots.size(); }

CoeffMatrix nullspace(const CoeffMatrix& m) {
  const RowEchelon e = rref(m);
  const CoeffField f = m.zero().field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  CoeffMatrix basis = coeff_zero(m.cols(), free.size(), f);
  for (std::size_t t = 0; t < free.size(); ++t) {
    basis(free[t], t) = Coeff::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], t) = -e.reduced(r, free[t]);
  }
  return basis;
}

CoeffMatrix vstack(std::span<const CoeffMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidArgument, "vstack of nothing");
  std::size_t rows = 0;
  const std::size_t cols = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::InvalidArgument, "vstack: column mismatch");
    rows += b.rows();
  }
  CoeffMatrix out = coeff_zero(rows, cols, blocks.front().zero().field());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

CoeffMatrix hstack(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "hstack: row mismatch");
  CoeffMatrix out = coeff_zero(a.rows(), a.cols() + b.cols(), a.zero().field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

CoeffMatrix matrix_power(const CoeffMatrix& m, std::size_t k) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "power of non-square matrix");
  CoeffMatrix acc = coeff_identity(m.rows(), m.zero().field());
  CoeffMatrix base = m;
  while (k) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return acc;
}

CoeffMatrix column_vector(const CoeffVector& v) {
  if (v.empty()) throw Error(ErrorKind::InvalidArgument, "empty vector");
  CoeffMatrix out = coeff_zero(v.size(), 1, v.front().field());
  for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
  return out;
}

bool column_span_contains(const CoeffMatrix& big, const CoeffMatrix& small) {
  if (small.cols() == 0) return true;
  return rank(hstack(big, small)) == rank(big);
}

Polynomial char_poly(const CoeffMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "char_poly: not square");
  const CoeffField f = m.zero().field();
  const std::size_t n = m.rows();
  CoeffMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      h.swap_rows(piv, j + 1);
      h.swap_columns(piv, j + 1);
    }
    const Coeff inv = h(j + 1, j).inverse();
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j).is_zero()) continue;
      const Coeff u = h(k, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(Coeff::one(f)));
  for (std::size_t m1 = 1; m1 <= n; ++m1) {
    Polynomial next = Polynomial::x_minus(h(m1 - 1, m1 - 1)) * p[m1 - 1];
    Coeff t = Coeff::one(f);
    for (std::size_t i = m1 - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t.is_zero()) break;
      const Coeff c = h(i - 1, m1 - 1) * t;
      if (!c.is_zero()) next = next - Polynomial::constant(c) * p[i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Polynomial minimal_poly(const CoeffMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "minimal_poly: not square");
  const CoeffField f = m.zero().field();
  const std::size_t n = m.rows();
  std::vector<CoeffMatrix> powers{coeff_identity(n, f)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    CoeffMatrix krylov = coeff_zero(n * n, k + 1, f);
    for (std::size_t t = 0; t <= k; ++t)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) krylov(i * n + j, t) = powers[t](i, j);
    const CoeffMatrix ker = nullspace(krylov);
    if (ker.cols() == 0) continue;
    // First dependency: the kernel is one-dimensional and its last entry is nonzero.
    std::vector<Coeff> c = ker.column(0);
    return Polynomial(f, std::move(c)).monic();
  }
  return char_poly(m);  // unreachable by Cayley-Hamilton
}

bool is_semisimple(const CoeffMatrix& m) {
  if (m.rows() == 0) return true;
  const Polynomial mp = minimal_poly(m);
  return gcd(mp, mp.derivative()).degree() == 0;
}

bool commute(const CoeffMatrix& a, const CoeffMatrix& b) { return a * b == b * a; }

std::vector<int> jordan_type(const CoeffMatrix& m, const Coeff& mu) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "jordan_type: not square");
  const std::size_t n = m.rows();
  CoeffMatrix shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mu;
  std::vector<std::size_t> ranks{n};
  CoeffMatrix power = coeff_identity(n, mu.field());
  while (true) {
    power = power * shifted;
    const std::size_t rk = rank(power);
    if (rk == ranks.back()) break;
    ranks.push_back(rk);
  }
  // at_least[k] = number of blocks of size >= k+1
  std::vector<long> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    at_least.push_back(static_cast<long>(ranks[k - 1] - ranks[k]));
  std::vector<int> parts;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    const long exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (long c = 0; c < exact; ++c) parts.push_back(static_cast<int>(k + 1));
  }
  return parts;
}

}  // namespace mirahoric
