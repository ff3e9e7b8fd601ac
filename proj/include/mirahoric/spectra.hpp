#ifndef MIRAHORIC_SPECTRA_HPP
#define MIRAHORIC_SPECTRA_HPP

// Spectral data of the commuting family U^(1..n-1) on level-r invariants:
// the joint kernel (F_r), the localization at the Atkin-Lehner ideal (L_r)
// realized as a generalized eigenspace, Jordan types and banality.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mirahoric/character.hpp"
#include "mirahoric/linalg.hpp"

namespace mirahoric {

// The ideal (lambda, X_1, ..., X_{n-1}). Over F_ell, localizing means taking
// the joint generalized eigenspace at 0. Over Q an auxiliary prime ell is
// designated and eigenvalues of positive ell-adic valuation are kept.
struct AtkinLehnerIdealSpec {
  CoeffField field;
  std::optional<long> valuation_prime;
};

// Basis (as columns) of the intersection of the kernels. Throws NonCommuting
// if two inputs do not commute.
CoeffMatrix joint_kernel(std::span<const CoeffMatrix> ops);

// Throws FieldExtensionRequired over Q when a characteristic polynomial has
// an irreducible factor of degree > 1.
CoeffMatrix joint_generalized_nullspace(std::span<const CoeffMatrix> ops,
                                        const AtkinLehnerIdealSpec& spec);

// ell does not divide #GL_n(F_p) = p^{n(n-1)/2} prod_{i=1..n} (p^i - 1).
bool banality_check(long ell, int n, const BaseField& F);

// The first `count` banal primes for (n, p), in increasing order.
std::vector<long> banal_primes(int n, const BaseField& F, std::size_t count);

struct EigenBlock {
  Coeff eigenvalue;
  int multiplicity = 0;
  std::vector<int> jordan;
};

struct OperatorSpectrum {
  int j = 0;
  Polynomial char_poly;
  bool splits = false;
  bool semisimple = false;
  std::vector<EigenBlock> eigen;  // eigenvalues in the base field
};

struct JointEigenspace {
  std::vector<Coeff> eigenvalues;  // one per operator
  std::size_t dim = 0;
};

struct SpectralReport {
  int n = 0;
  long p = 0;
  int r = 0;
  CoeffField field;
  std::vector<std::string> chi;
  bool normalized = false;
  std::optional<long> valuation_prime;
  std::size_t dim = 0;
  std::vector<OperatorSpectrum> operators;
  std::size_t dim_F = 0;
  std::optional<std::size_t> dim_L;
  std::string dim_L_note;  // why dim_L is absent
  std::vector<JointEigenspace> joint_eigenspaces;
  std::vector<std::size_t> dim_F_by_level;  // levels 1..r
  int stabilization_r = 0;
};

SpectralReport spectral_report(int n, const BaseField& F, int r, const UnramifiedChar& chi,
                               const AtkinLehnerIdealSpec& spec);

}  // namespace mirahoric

#endif  // MIRAHORIC_SPECTRA_HPP
