#include "mirahoric/mann.hpp"

#include <string>
#include <utility>

namespace mirahoric {

namespace {

void check_range(int n, int j, LevelKind kind) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const int hi = kind == LevelKind::Positive ? n - 1 : n;
  if (j < 1 || j > hi)
    throw Error(ErrorKind::InvalidArgument,
                "j = " + std::to_string(j) + " out of range 1.." + std::to_string(hi));
}

bool contains(const std::vector<int>& s, int x) {
  for (int y : s)
    if (y == x) return true;
  return false;
}

std::vector<std::pair<int, int>> allowed_pairs(int n, const std::vector<int>& subset) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    if (!contains(subset, i)) continue;
    for (int k = i + 1; k <= n; ++k)
      if (!contains(subset, k)) pairs.emplace_back(i, k);
  }
  return pairs;
}

// Small integer determinant by cofactor expansion (n <= 4 in practice).
long long int_det(const std::vector<long>& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return static_cast<long long>(a[0]) * a[3] - static_cast<long long>(a[1]) * a[2];
  long long det = 0;
  std::vector<long> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int c = 0; c < n; ++c) {
    if (a[static_cast<std::size_t>(c)] == 0) continue;
    std::size_t idx = 0;
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != c) minor[idx++] = a[static_cast<std::size_t>(i * n + k)];
    const long long sub = int_det(minor, n - 1);
    det += (c % 2 == 0 ? 1 : -1) * a[static_cast<std::size_t>(c)] * sub;
  }
  return det;
}

}  // namespace

int subset_exponent(int n, const std::vector<int>& subset) {
  return static_cast<int>(allowed_pairs(n, subset).size());
}

std::vector<std::vector<int>> subsets_colex(int m, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > m) return out;
  // Increasing bitmasks with bit (i-1) for element i enumerate colex order.
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (__builtin_popcountl(mask) != j) continue;
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask & (1UL << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MannRep> enumerate_mann_reps(int n, int j, const BaseField& F, LevelKind kind) {
  check_range(n, j, kind);
  const int universe = kind == LevelKind::Positive ? n - 1 : n;
  std::vector<MannRep> reps;
  for (const auto& subset : subsets_colex(universe, j)) {
    const auto pairs = allowed_pairs(n, subset);
    std::vector<long> digits(pairs.size(), 0);
    while (true) {
      MannRep rep;
      rep.n = n;
      rep.subset = subset;
      rep.matrix = local_identity(static_cast<std::size_t>(n));
      for (int i : subset)
        rep.matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = F.p();
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [i, k] = pairs[t];
        rep.free_entries.push_back({i, k, digits[t]});
        rep.matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) = digits[t];
      }
      reps.push_back(std::move(rep));

      // Odometer, last pair fastest: row-major lexicographic assignments.
      bool wrapped = true;
      for (std::size_t t = pairs.size(); t-- > 0;) {
        if (++digits[t] < F.p()) {
          wrapped = false;
          break;
        }
        digits[t] = 0;
      }
      if (wrapped) break;
    }
  }
  return reps;
}

CosetDegree coset_degree(int n, int j, const BaseField& F, LevelKind kind) {
  check_range(n, j, kind);
  const int universe = kind == LevelKind::Positive ? n - 1 : n;
  Integer total = 0;
  for (const auto& subset : subsets_colex(universe, j)) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(F.q()),
                  static_cast<unsigned long>(subset_exponent(n, subset)));
    total += term;
  }
  return CosetDegree{n, j, kind, total};
}

bool in_mirahoric(const LocalMatrix& u, const BaseField& F, int r) {
  if (!in_maximal_compact(u, F)) return false;
  const std::size_t n = u.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Rational target = k + 1 == n ? u(n - 1, k) - 1 : u(n - 1, k);
    if (target != 0 && val_p(target, F) < r) return false;
  }
  return true;
}

PartitionReport verify_partition(int n, int j, const BaseField& F, int r, std::uint64_t budget) {
  check_range(n, j, LevelKind::Positive);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "verify_partition needs r >= 1");
  const long m = F.modulus(r);
  const int cells = n * n;
  long double total = 1;
  for (int c = 0; c < cells; ++c) total *= static_cast<long double>(m);
  if (total > static_cast<long double>(budget))
    throw Error(ErrorKind::BudgetExceeded,
                "(p^r)^(n^2) exceeds brute-force budget " + std::to_string(budget));

  PartitionReport report;
  const auto reps = enumerate_mann_reps(n, j, F, LevelKind::Positive);
  report.degree = coset_degree(n, j, F).value;

  report.pairwise_distinct = true;
  for (std::size_t a = 0; a < reps.size() && report.pairwise_distinct; ++a) {
    const LocalMatrix inv = inverse(reps[a].matrix);
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      if (in_mirahoric(inv * reps[b].matrix, F, r)) {
        report.pairwise_distinct = false;
        break;
      }
  }

  // Count images in GL_n(Z/p^r) of U_1(p^r) and of the subgroup where the
  // top-right j x (n-j) block is also divisible by p.
  std::vector<long> a(static_cast<std::size_t>(cells), 0);
  std::uint64_t whole = 0, sub = 0;
  while (true) {
    bool last_row_ok = true;
    for (int k = 0; k < n && last_row_ok; ++k) {
      const long want = k == n - 1 ? 1 % m : 0;
      last_row_ok = a[static_cast<std::size_t>((n - 1) * n + k)] == want;
    }
    if (last_row_ok && mod_floor(static_cast<long>(int_det(a, n) % F.p()), F.p()) != 0) {
      ++whole;
      bool block_ok = true;
      for (int i = 0; i < j && block_ok; ++i)
        for (int k = j; k < n && block_ok; ++k)
          block_ok = a[static_cast<std::size_t>(i * n + k)] % F.p() == 0;
      if (block_ok) ++sub;
    }
    int c = cells - 1;
    while (c >= 0) {
      if (++a[static_cast<std::size_t>(c)] < m) break;
      a[static_cast<std::size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
  if (sub == 0 || whole % sub != 0)
    throw Error(ErrorKind::InvalidArgument, "subgroup count does not divide group count");
  report.oracle_index = Integer(static_cast<unsigned long>(whole / sub));
  report.degree_matches = report.oracle_index == report.degree;
  return report;
}

}  // namespace mirahoric
