#include "mirahoric/principal_series.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace mirahoric {

namespace {

long residue_valuation(long x, long p, int r) {
  if (x == 0) return r;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long power(long p, long e) {
  long out = 1;
  for (long i = 0; i < e; ++i) out *= p;
  return out;
}

std::vector<long> valuation_profile(const std::vector<long>& row, long p, int r) {
  std::vector<long> prof;
  prof.reserve(row.size());
  for (long x : row) prof.push_back(residue_valuation(x, p, r));
  return prof;
}

// Integral matrix with last row `row` and unit determinant mod p.
LocalMatrix complete_row(const std::vector<long>& row, const BaseField& F, int r,
                         std::mt19937_64* rng) {
  const std::size_t n = row.size();
  std::size_t unit_slot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (row[i] % F.p() != 0) {
      unit_slot = i;
      break;
    }
  LocalMatrix h = local_zero(n);
  std::size_t out_row = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == unit_slot) continue;
    h(out_row++, k) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) h(n - 1, k) = row[k];
  if (rng == nullptr || n == 1) return h;

  // Left-multiply by [[A', v], [0, 1]] with A' unimodular; the last row is kept.
  const long m = F.modulus(r);
  LocalMatrix a = local_identity(n);
  auto draw = [&](long bound) { return static_cast<long>((*rng)() % static_cast<std::uint64_t>(bound)); };
  for (std::size_t step = 0; step < 3 * n; ++step) {
    if (n - 1 >= 2 && draw(4) == 0) {
      const std::size_t x = static_cast<std::size_t>(draw(static_cast<long>(n - 1)));
      const std::size_t y = static_cast<std::size_t>(draw(static_cast<long>(n - 1)));
      a.swap_rows(x, y);
      continue;
    }
    const std::size_t x = static_cast<std::size_t>(draw(static_cast<long>(n - 1)));
    const std::size_t y = static_cast<std::size_t>(draw(static_cast<long>(n - 1)));
    if (x == y) continue;
    const long c = draw(7) - 3;
    for (std::size_t k = 0; k < n; ++k) a(x, k) += c * a(y, k);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, n - 1) = draw(m);
  LocalMatrix mixed = a * h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Integer v = mixed(i, k).get_num();
      v %= m;
      if (v < 0) v += m;
      mixed(i, k) = Rational(v);
    }
  return mixed;
}

std::vector<long> last_row_mod(const LocalMatrix& g, const BaseField& F, int r) {
  const std::size_t n = g.rows();
  std::vector<long> row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = reduce_mod(g(n - 1, k), F, r);
  return row;
}

}  // namespace

bool is_primitive(std::span<const long> v, const BaseField& F) {
  return std::any_of(v.begin(), v.end(), [&](long x) { return mod_floor(x, F.p()) != 0; });
}

CanonicalRow canonical_row(std::span<const long> v, const BaseField& F, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "canonical_row needs r >= 1");
  const long m = F.modulus(r);
  if (!is_primitive(v, F))
    throw Error(ErrorKind::InvalidArgument, "row is not primitive (no unit entry)");
  CanonicalRow out{r, {}};
  out.entries.reserve(v.size());
  long ideal = r;  // valuation generating the ideal of earlier entries
  for (long x : v) {
    const long val = residue_valuation(mod_floor(x, m), F.p(), r);
    if (val < ideal) {
      out.entries.push_back(power(F.p(), val));
      ideal = val;
    } else {
      out.entries.push_back(0);
    }
  }
  return out;
}

std::size_t InvariantBasis::index_of(std::span<const long> row, const BaseField& F) const {
  const CanonicalRow c = canonical_row(row, F, r);
  const auto it = index.find(c.entries);
  if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "row outside the basis");
  return it->second;
}

InvariantBasis enumerate_basis(int n, const BaseField& F, int r, const BasisOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "level r must be >= 1");
  const long m = F.modulus(r);
  long double total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<long double>(m);
  if (total > static_cast<long double>(options.budget))
    throw Error(ErrorKind::BudgetExceeded,
                "p^(rn) rows exceed enumeration budget " + std::to_string(options.budget));

  std::set<std::vector<long>> seen;
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  while (true) {
    if (is_primitive(v, F)) seen.insert(canonical_row(v, F, r).entries);
    int c = n - 1;
    while (c >= 0) {
      if (++v[static_cast<std::size_t>(c)] < m) break;
      v[static_cast<std::size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }

  std::vector<std::vector<long>> rows(seen.begin(), seen.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return valuation_profile(a, F.p(), r) < valuation_profile(b, F.p(), r);
  });

  InvariantBasis basis;
  basis.n = n;
  basis.p = F.p();
  basis.r = r;
  std::optional<std::mt19937_64> rng;
  if (options.lift_seed) rng.emplace(*options.lift_seed);
  for (const auto& row : rows) {
    basis.index.emplace(row, basis.rows.size());
    basis.rows.push_back({r, row});
    LocalMatrix h = complete_row(row, F, r, rng ? &*rng : nullptr);
    basis.lifts.push_back(inverse(h));
    basis.lift_inverses.push_back(std::move(h));
  }
  return basis;
}

HeckeMatrix hecke_matrix(const InvariantBasis& basis, int j, const UnramifiedChar& chi,
                         const BaseField& F) {
  if (chi.n() != basis.n)
    throw Error(ErrorKind::InvalidArgument, "character rank differs from n");
  if (basis.p != F.p()) throw Error(ErrorKind::InvalidArgument, "basis built for another prime");
  const auto reps = enumerate_mann_reps(basis.n, j, F, LevelKind::Positive);
  const CoeffField& field = chi.field();
  chi.effective_values(F);  // surface NoHalfPowers before assembling
  CoeffMatrix m = coeff_zero(basis.size(), basis.size(), field);
  for (std::size_t y = 0; y < basis.size(); ++y) {
    for (const MannRep& b : reps) {
      const IwasawaDecomposition iw = iwasawa(basis.lifts[y] * b.matrix, F);
      const std::size_t x = basis.index_of(last_row_mod(iw.k_inverse, F, basis.r), F);
      m(y, x) += chi_eval(chi, iw.beta, F);
    }
  }
  return HeckeMatrix{basis.n, basis.p, basis.r, j, chi, std::move(m)};
}

HeckeMatrix hecke_matrix(int n, const BaseField& F, int r, int j, const UnramifiedChar& chi) {
  return hecke_matrix(enumerate_basis(n, F, r), j, chi, F);
}

std::vector<CoeffMatrix> hecke_family(const InvariantBasis& basis, const UnramifiedChar& chi,
                                      const BaseField& F) {
  std::vector<CoeffMatrix> out;
  for (int j = 1; j < basis.n; ++j) out.push_back(hecke_matrix(basis, j, chi, F).entries);
  return out;
}

CoeffMatrix embedding_matrix(int n, const BaseField& F, int r, int s, const CoeffField& field) {
  if (r < 1 || r > s) throw Error(ErrorKind::InvalidArgument, "embedding needs 1 <= r <= s");
  const InvariantBasis coarse = enumerate_basis(n, F, r);
  const InvariantBasis fine = enumerate_basis(n, F, s);
  const long m = F.modulus(r);
  CoeffMatrix e = coeff_zero(fine.size(), coarse.size(), field);
  for (std::size_t xs = 0; xs < fine.size(); ++xs) {
    std::vector<long> reduced;
    for (long x : fine.rows[xs].entries) reduced.push_back(x % m);
    e(xs, coarse.index_of(reduced, F)) = Coeff::one(field);
  }
  return e;
}

CoeffMatrix projector_matrix(int n, const BaseField& F, int r, int s, const UnramifiedChar& chi) {
  if (r < 1 || r > s) throw Error(ErrorKind::InvalidArgument, "projector needs 1 <= r <= s");
  if (chi.n() != n) throw Error(ErrorKind::InvalidArgument, "character rank differs from n");
  const CoeffField& field = chi.field();
  const InvariantBasis basis = enumerate_basis(n, F, s);
  const long step = F.modulus(r);
  const long range = F.modulus(s - r);
  Coeff count = Coeff::one(field);
  for (int i = 0; i < n; ++i) count *= Coeff(field, range);
  if (count.is_zero())
    throw Error(ErrorKind::IndexNotInvertible,
                "index p^(n(s-r)) vanishes in " + field.name());
  const Coeff weight = count.inverse();

  CoeffMatrix proj = coeff_zero(basis.size(), basis.size(), field);
  std::vector<long> t(static_cast<std::size_t>(n), 0);
  const std::size_t nn = static_cast<std::size_t>(n);
  while (true) {
    // u = I + p^r (t_1 E_n1 + ... + t_n E_nn); only e_n u^{-1} is needed.
    LocalMatrix u = local_identity(nn);
    for (std::size_t k = 0; k < nn; ++k) u(nn - 1, k) += Rational(step * t[k]);
    const LocalMatrix u_inv = inverse(u);
    for (std::size_t y = 0; y < basis.size(); ++y) {
      const LocalMatrix moved = u_inv * basis.lift_inverses[y];
      const std::size_t x = basis.index_of(last_row_mod(moved, F, s), F);
      proj(y, x) += weight;
    }
    int c = n - 1;
    while (c >= 0) {
      if (++t[static_cast<std::size_t>(c)] < range) break;
      t[static_cast<std::size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return proj;
}

}  // namespace mirahoric
