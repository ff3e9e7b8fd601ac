#include "mirahoric/oracles.hpp"

namespace mirahoric::oracle {

Integer gaussian_binomial(int n, int k, long q) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n - i + 1));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::uint64_t count_gl_n(int n, long p) {
  const int cells = n * n;
  std::vector<long> a(static_cast<std::size_t>(cells), 0);
  std::uint64_t count = 0;
  while (true) {
    // Rank over F_p by elimination on a copy.
    std::vector<long> m = a;
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
      int piv = rank;
      while (piv < n && m[static_cast<std::size_t>(piv * n + c)] % p == 0) ++piv;
      if (piv == n) continue;
      for (int k = 0; k < n; ++k)
        std::swap(m[static_cast<std::size_t>(piv * n + k)], m[static_cast<std::size_t>(rank * n + k)]);
      const long inv = mod_inverse(m[static_cast<std::size_t>(rank * n + c)], p);
      for (int i = 0; i < n; ++i) {
        if (i == rank) continue;
        const long f = (m[static_cast<std::size_t>(i * n + c)] * inv) % p;
        for (int k = 0; k < n; ++k)
          m[static_cast<std::size_t>(i * n + k)] =
              mod_floor(m[static_cast<std::size_t>(i * n + k)] - f * m[static_cast<std::size_t>(rank * n + k)], p);
      }
      ++rank;
    }
    if (rank == n) ++count;
    int c = cells - 1;
    while (c >= 0) {
      if (++a[static_cast<std::size_t>(c)] < p) break;
      a[static_cast<std::size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return count;
}

std::map<std::vector<long>, std::vector<long>> triangular_orbits(int n, long p, int r) {
  long m = 1;
  for (int i = 0; i < r; ++i) m *= p;
  const std::size_t nn = static_cast<std::size_t>(n);

  // All invertible upper-triangular matrices over Z/m: unit diagonal entries,
  // arbitrary entries above.
  std::vector<long> units;
  for (long u = 1; u < m; ++u)
    if (u % p != 0) units.push_back(u);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t k = i + 1; k < nn; ++k) slots.emplace_back(i, k);
  std::vector<std::vector<long>> group;  // row-major n x n
  std::vector<std::size_t> diag(nn, 0);
  std::vector<long> upper(slots.size(), 0);
  while (true) {
    std::vector<long> b(nn * nn, 0);
    for (std::size_t i = 0; i < nn; ++i) b[i * nn + i] = units[diag[i]];
    for (std::size_t s = 0; s < slots.size(); ++s) b[slots[s].first * nn + slots[s].second] = upper[s];
    group.push_back(std::move(b));
    std::size_t s = slots.size();
    bool carried = true;
    while (s-- > 0) {
      if (++upper[s] < m) {
        carried = false;
        break;
      }
      upper[s] = 0;
    }
    if (!carried) continue;
    std::size_t d = nn;
    carried = true;
    while (d-- > 0) {
      if (++diag[d] < units.size()) {
        carried = false;
        break;
      }
      diag[d] = 0;
    }
    if (carried) break;
  }

  std::map<std::vector<long>, std::vector<long>> label;
  std::vector<long> x(nn, 0);
  while (true) {
    bool primitive = false;
    for (long v : x) primitive = primitive || v % p != 0;
    if (primitive && label.find(x) == label.end()) {
      std::vector<std::vector<long>> orbit;
      for (const auto& b : group) {
        std::vector<long> y(nn, 0);
        for (std::size_t k = 0; k < nn; ++k) {
          long acc = 0;
          for (std::size_t i = 0; i <= k; ++i) acc += x[i] * b[i * nn + k];
          y[k] = acc % m;
        }
        orbit.push_back(std::move(y));
      }
      std::vector<long> smallest = x;
      for (const auto& y : orbit)
        if (y < smallest) smallest = y;
      for (auto& y : orbit) label[std::move(y)] = smallest;
    }
    std::size_t c = nn;
    bool carried = true;
    while (c-- > 0) {
      if (++x[c] < m) {
        carried = false;
        break;
      }
      x[c] = 0;
    }
    if (carried) break;
  }
  return label;
}

}  // namespace mirahoric::oracle
