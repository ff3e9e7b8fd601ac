#ifndef MIRAHORIC_PRINCIPAL_SERIES_HPP
#define MIRAHORIC_PRINCIPAL_SERIES_HPP

// Finite model of V^{U_1(p^r)} for V = Ind_B^G(chi), chi unramified.
//
// By G = B K and chi trivial on B(Z_p), an invariant vector is a function on
// B(Z_p) \ K / U_1(p^r). The map k -> e_n k^{-1} mod p^r identifies
// K / U_1(p^r) with primitive rows over Z/p^r, and left multiplication by
// B(Z_p) becomes the right action x -> x beta^{-1} of upper-triangular
// matrices. Each orbit has one canonical row; the indicator functions f_x of
// the orbits form the basis used for every matrix below.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mirahoric/character.hpp"
#include "mirahoric/mann.hpp"

namespace mirahoric {

struct CanonicalRow {
  int r = 0;
  std::vector<long> entries;

  friend bool operator==(const CanonicalRow& a, const CanonicalRow& b) {
    return a.r == b.r && a.entries == b.entries;
  }
};

bool is_primitive(std::span<const long> v, const BaseField& F);

// Greedy left-to-right normal form under the right upper-triangular action:
// each entry becomes p^{val} if its valuation is below that of the ideal
// spanned by the earlier entries, and 0 otherwise. Throws for non-primitive v.
CanonicalRow canonical_row(std::span<const long> v, const BaseField& F, int r);

struct InvariantBasis {
  int n = 0;
  long p = 0;
  int r = 0;
  std::vector<CanonicalRow> rows;
  // lifts[x] = k_x in GL_n(Z_p) with e_n (k_x mod p^r)^{-1} = rows[x];
  // lift_inverses[x] = k_x^{-1}, an integral matrix with last row rows[x].
  std::vector<LocalMatrix> lifts;
  std::vector<LocalMatrix> lift_inverses;
  std::map<std::vector<long>, std::size_t> index;

  std::size_t size() const noexcept { return rows.size(); }
  // Index of the orbit of an arbitrary primitive row.
  std::size_t index_of(std::span<const long> row, const BaseField& F) const;
};

struct BasisOptions {
  // When set, each lift is a pseudo-random completion of its row.
  std::optional<std::uint64_t> lift_seed;
  std::uint64_t budget = kDefaultBruteForceBudget;
};

// Rows are sorted by their valuation profile, e.g. for n = 2:
// (1,0), (p,1), ..., (p^{r-1},1), (0,1).
InvariantBasis enumerate_basis(int n, const BaseField& F, int r, const BasisOptions& options = {});

struct HeckeMatrix {
  int n = 0;
  long p = 0;
  int r = 0;
  int j = 0;
  UnramifiedChar chi;
  CoeffMatrix entries;
};

// Column x is U^(j) f_x; entry (y, x) is (U^(j) f_x)(k_y) =
// sum over Mann representatives b of chi(beta) [class(k'') = x], where
// k_y b = beta k''.
HeckeMatrix hecke_matrix(const InvariantBasis& basis, int j, const UnramifiedChar& chi,
                         const BaseField& F);
HeckeMatrix hecke_matrix(int n, const BaseField& F, int r, int j, const UnramifiedChar& chi);

// U^(1), ..., U^(n-1) on one basis.
std::vector<CoeffMatrix> hecke_family(const InvariantBasis& basis, const UnramifiedChar& chi,
                                      const BaseField& F);

// Inclusion V^{U_1(p^r)} -> V^{U_1(p^s)}: E(x_s, x_r) = 1 iff x_s mod p^r lies
// in the orbit x_r.
CoeffMatrix embedding_matrix(int n, const BaseField& F, int r, int s, const CoeffField& field);

// Averaging over U_1(p^r) / U_1(p^s) on level-s invariants. The character
// only fixes the coefficient field; its values do not enter.
CoeffMatrix projector_matrix(int n, const BaseField& F, int r, int s, const UnramifiedChar& chi);

}  // namespace mirahoric

#endif  // MIRAHORIC_PRINCIPAL_SERIES_HPP
