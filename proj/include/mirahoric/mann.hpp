#ifndef MIRAHORIC_MANN_HPP
#define MIRAHORIC_MANN_HPP

// Upper-triangular coset representatives b with
//   U_1(p^r) alpha_j U_1(p^r) = disjoint union of b U_1(p^r),
// alpha_j = diag(p 1_j, 1_{n-j}). The same list serves every level r >= 1;
// the level-zero variant lets the subset I range over {1..n}.

#include <cstdint>
#include <vector>

#include "mirahoric/arith.hpp"

namespace mirahoric {

enum class LevelKind { Positive, Zero };

struct FreeEntry {
  int row;  // 1-based, in I
  int col;  // 1-based, not in I, row < col
  long value;
};

struct MannRep {
  int n = 0;
  std::vector<int> subset;  // I, 1-based, increasing
  std::vector<FreeEntry> free_entries;
  LocalMatrix matrix;

  friend bool operator==(const MannRep& a, const MannRep& b) {
    return a.n == b.n && a.subset == b.subset && a.matrix == b.matrix;
  }
};

struct CosetDegree {
  int n = 0;
  int j = 0;
  LevelKind kind = LevelKind::Positive;
  Integer value;
};

// e(I) = #{(i, k) : i in I, k not in I, i < k <= n}; |B_I| = q^{e(I)}.
int subset_exponent(int n, const std::vector<int>& subset);

// Subsets of {1..m} of size j in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int m, int j);

std::vector<MannRep> enumerate_mann_reps(int n, int j, const BaseField& F,
                                         LevelKind kind = LevelKind::Positive);

CosetDegree coset_degree(int n, int j, const BaseField& F,
                         LevelKind kind = LevelKind::Positive);

// Membership in U_1(p^r) using exact rational arithmetic.
bool in_mirahoric(const LocalMatrix& u, const BaseField& F, int r);

inline constexpr std::uint64_t kDefaultBruteForceBudget = std::uint64_t{1} << 24;

struct PartitionReport {
  bool pairwise_distinct = false;
  Integer oracle_index;
  Integer degree;
  bool degree_matches = false;
};

// Checks the representatives against U_1(p^r): pairwise b^{-1} b' is never
// in U_1(p^r), and their number equals [U_1 : U_1 cap alpha U_1 alpha^{-1}],
// counted by filtering all n x n matrices over Z/p^r.
PartitionReport verify_partition(int n, int j, const BaseField& F, int r,
                                 std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace mirahoric

#endif  // MIRAHORIC_MANN_HPP
