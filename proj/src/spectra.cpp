#include "mirahoric/spectra.hpp"

#include "mirahoric/principal_series.hpp"

namespace mirahoric {

namespace {

void check_family(std::span<const CoeffMatrix> ops) {
  if (ops.empty()) throw Error(ErrorKind::InvalidArgument, "empty operator family");
  for (const auto& m : ops)
    if (!m.is_square() || m.rows() != ops.front().rows())
      throw Error(ErrorKind::InvalidArgument, "operators must be square of equal size");
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      if (!commute(ops[a], ops[b]))
        throw Error(ErrorKind::NonCommuting, "operators " + std::to_string(a + 1) + " and " +
                                                 std::to_string(b + 1) + " do not commute");
}

long ell_valuation(const Coeff& c, long ell) {
  return val_p(c.rational(), ell);
}

}  // namespace

CoeffMatrix joint_kernel(std::span<const CoeffMatrix> ops) {
  check_family(ops);
  return nullspace(vstack(ops));
}

CoeffMatrix joint_generalized_nullspace(std::span<const CoeffMatrix> ops,
                                        const AtkinLehnerIdealSpec& spec) {
  check_family(ops);
  const std::size_t d = ops.front().rows();
  std::vector<CoeffMatrix> blocks;
  if (!spec.field.is_rational()) {
    for (const auto& m : ops) blocks.push_back(matrix_power(m, d));
    return nullspace(vstack(blocks));
  }
  if (!spec.valuation_prime)
    throw Error(ErrorKind::InvalidArgument, "rational localization needs a designated prime");
  const long ell = *spec.valuation_prime;
  if (!is_prime(ell)) throw Error(ErrorKind::NotPrime, "designated prime must be prime");
  for (const auto& m : ops) {
    const Polynomial cp = char_poly(m);
    const auto roots = roots_in_field(cp);
    int total = 0;
    Polynomial selected = Polynomial::constant(Coeff::one(spec.field));
    for (const Root& root : roots) {
      total += root.multiplicity;
      if (root.value.is_zero() || ell_valuation(root.value, ell) > 0)
        for (int k = 0; k < root.multiplicity; ++k)
          selected = selected * Polynomial::x_minus(root.value);
    }
    if (total != cp.degree())
      throw Error(ErrorKind::FieldExtensionRequired,
                  "characteristic polynomial does not split over Q; requires field extension");
    blocks.push_back(eval(selected, m));
  }
  return nullspace(vstack(blocks));
}

bool banality_check(long ell, int n, const BaseField& F) {
  if (!is_prime(ell)) throw Error(ErrorKind::NotPrime, "ell must be prime");
  if (ell == F.p()) throw Error(ErrorKind::InvalidArgument, "ell must differ from p");
  // ell != p, so only the factors p^i - 1 matter.
  for (int i = 1; i <= n; ++i) {
    long acc = 1;
    for (int k = 0; k < i; ++k) acc = (acc * (F.p() % ell)) % ell;
    if (mod_floor(acc - 1, ell) == 0) return false;
  }
  return true;
}

std::vector<long> banal_primes(int n, const BaseField& F, std::size_t count) {
  std::vector<long> out;
  for (long ell = 2; out.size() < count; ++ell) {
    if (!is_prime(ell) || ell == F.p()) continue;
    if (banality_check(ell, n, F)) out.push_back(ell);
  }
  return out;
}

namespace {

OperatorSpectrum analyse_operator(int j, const CoeffMatrix& m) {
  OperatorSpectrum s{j, char_poly(m), false, false, {}};
  int total = 0;
  for (const Root& root : roots_in_field(s.char_poly)) {
    total += root.multiplicity;
    s.eigen.push_back({root.value, root.multiplicity, jordan_type(m, root.value)});
  }
  s.splits = total == s.char_poly.degree();
  s.semisimple = is_semisimple(m);
  return s;
}

void collect_joint(const std::vector<CoeffMatrix>& ops, const std::vector<OperatorSpectrum>& spectra,
                   std::size_t depth, std::vector<Coeff>& chosen, std::vector<CoeffMatrix>& blocks,
                   std::vector<JointEigenspace>& out) {
  const std::size_t d = ops.front().rows();
  if (depth == ops.size()) {
    const std::size_t dim = nullspace(vstack(blocks)).cols();
    if (dim > 0) out.push_back({chosen, dim});
    return;
  }
  for (const EigenBlock& e : spectra[depth].eigen) {
    CoeffMatrix shifted = ops[depth];
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= e.eigenvalue;
    chosen.push_back(e.eigenvalue);
    blocks.push_back(matrix_power(shifted, d));
    collect_joint(ops, spectra, depth + 1, chosen, blocks, out);
    blocks.pop_back();
    chosen.pop_back();
  }
}

}  // namespace

SpectralReport spectral_report(int n, const BaseField& F, int r, const UnramifiedChar& chi,
                               const AtkinLehnerIdealSpec& spec) {
  if (chi.field() != spec.field)
    throw Error(ErrorKind::FieldMismatch, "character and ideal spec use different fields");
  SpectralReport rep;
  rep.n = n;
  rep.p = F.p();
  rep.r = r;
  rep.field = spec.field;
  for (const Coeff& c : chi.values()) rep.chi.push_back(c.to_string());
  rep.normalized = chi.normalized();
  rep.valuation_prime = spec.valuation_prime;

  std::vector<CoeffMatrix> ops;
  for (int level = 1; level <= r; ++level) {
    const InvariantBasis basis = enumerate_basis(n, F, level);
    std::vector<CoeffMatrix> family = hecke_family(basis, chi, F);
    const std::size_t dim_f = family.empty() ? basis.size() : joint_kernel(family).cols();
    rep.dim_F_by_level.push_back(dim_f);
    if (level == r) {
      rep.dim = basis.size();
      ops = std::move(family);
    }
  }
  rep.dim_F = rep.dim_F_by_level.back();
  rep.stabilization_r = r;
  for (int level = r - 1; level >= 1; --level) {
    if (rep.dim_F_by_level[static_cast<std::size_t>(level - 1)] != rep.dim_F) break;
    rep.stabilization_r = level;
  }

  if (ops.empty()) {
    rep.dim_L = rep.dim;
    return rep;
  }
  for (std::size_t k = 0; k < ops.size(); ++k)
    rep.operators.push_back(analyse_operator(static_cast<int>(k + 1), ops[k]));

  if (spec.field.is_rational() && !spec.valuation_prime) {
    rep.dim_L_note = "no valuation prime designated";
  } else {
    try {
      rep.dim_L = joint_generalized_nullspace(ops, spec).cols();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::FieldExtensionRequired) throw;
      rep.dim_L_note = e.what();
    }
  }

  std::vector<Coeff> chosen;
  std::vector<CoeffMatrix> blocks;
  collect_joint(ops, rep.operators, 0, chosen, blocks, rep.joint_eigenspaces);
  return rep;
}

}  // namespace mirahoric
