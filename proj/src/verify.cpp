#include "mirahoric/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mirahoric/kirillov.hpp"
#include "mirahoric/mann.hpp"
#include "mirahoric/oracles.hpp"
#include "mirahoric/principal_series.hpp"
#include "mirahoric/spectra.hpp"

namespace mirahoric {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

std::string join(const std::vector<Coeff>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

class Checks {
 public:
  explicit Checks(SuiteResult& result) : result_(result) {}

  void expect(bool ok, const std::string& name, const std::string& expected = "true",
              const std::string& computed = "") {
    result_.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, expected,
                              computed.empty() ? (ok ? expected : "false") : computed});
  }

  template <typename T>
  void equal(const T& expected, const T& computed, const std::string& name) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    expect(expected == computed, name, e.str(), c.str());
  }

 private:
  SuiteResult& result_;
};

// Deterministic draws: raw engine output reduced by modulo, so the sequence
// does not depend on the standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long between(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational nonzero_rational() {
    long num = 0;
    while (num == 0) num = between(-9, 9);
    return make_rational(num, between(1, 4));
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t suite_seed(const VerifyOptions& o, int criterion) {
  return o.seed * 1000003ULL + static_cast<std::uint64_t>(criterion);
}

std::string label(int n, long p, int r) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
}

// ---- 1 ---------------------------------------------------------------------
void suite_cosets(Checks& c, const VerifyOptions&) {
  struct Point {
    int n, j;
    long p;
    int r;
  };
  const std::vector<Point> grid{{2, 1, 2, 1}, {2, 1, 2, 2}, {2, 1, 3, 1}, {2, 1, 3, 2},
                                {3, 1, 2, 1}, {3, 2, 2, 1}, {3, 1, 3, 1}};
  const auto start = std::chrono::steady_clock::now();
  for (const Point& g : grid) {
    const BaseField F(g.p);
    const PartitionReport rep = verify_partition(g.n, g.j, F, g.r);
    const std::string tag = "(n,j,p,r)=(" + std::to_string(g.n) + "," + std::to_string(g.j) +
                            "," + std::to_string(g.p) + "," + std::to_string(g.r) + ")";
    c.expect(rep.pairwise_distinct, tag + " representatives pairwise inequivalent");
    c.expect(rep.degree_matches, tag + " brute-force index equals degree", rep.degree.get_str(),
             rep.oracle_index.get_str());
    const auto reps = enumerate_mann_reps(g.n, g.j, F);
    c.equal(rep.degree.get_str(), std::to_string(reps.size()), tag + " representative count");
    if (g.n == 3 && g.j == 1 && g.p == 2 && g.r == 1)
      c.equal(std::string("6"), rep.oracle_index.get_str(), "index(3,1,2,1) = 2^2 + 2");
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  c.expect(ms < 120000.0, "runtime under 2 min", "< 120000 ms", std::to_string(ms) + " ms");
}

// ---- 2 ---------------------------------------------------------------------
void suite_gaussian(Checks& c, const VerifyOptions&) {
  for (long q : {2L, 3L, 5L}) {
    const BaseField F(q);
    for (int n = 1; n <= 4; ++n)
      for (int j = 1; j <= n; ++j) {
        const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                " j=" + std::to_string(j);
        const Integer degree = coset_degree(n, j, F, LevelKind::Zero).value;
        c.equal(oracle::gaussian_binomial(n, j, q).get_str(), degree.get_str(),
                tag + " level-zero degree = [n choose j]_q");
        c.equal(degree.get_str(),
                std::to_string(enumerate_mann_reps(n, j, F, LevelKind::Zero).size()),
                tag + " enumerated count");
      }
  }
}

// ---- 3 ---------------------------------------------------------------------
void suite_jordan(Checks& c, const VerifyOptions& o) {
  Draw draw(suite_seed(o, 3));
  const CoeffField Q;
  const auto start = std::chrono::steady_clock::now();
  for (long p : {2L, 3L, 5L}) {
    const BaseField F(p);
    for (int r : {2, 3, 4}) {
      const InvariantBasis basis = enumerate_basis(2, F, r);
      for (int sample = 0; sample < 5; ++sample) {
        // Generic: c1 != c2 and the two nonzero eigenvalues q c1, c2 differ.
        Rational c1, c2;
        do {
          c1 = draw.nonzero_rational();
          c2 = draw.nonzero_rational();
        } while (c1 == c2 || c1 * p == c2);
        const UnramifiedChar chi({Coeff(Q, c1), Coeff(Q, c2)});
        const std::string tag = label(2, p, r) + " chi=" + join(chi.values());
        const CoeffMatrix h = hecke_matrix(basis, 1, chi, F).entries;
        c.equal(static_cast<std::size_t>(r + 1), h.rows(), tag + " dim = r+1");
        c.equal(join(std::vector<int>{r - 1}), join(jordan_type(h, Coeff::zero(Q))), tag + " Jordan type at 0");
        const auto roots = roots_in_field(char_poly(h));
        int nonzero = 0;
        bool simple = true;
        for (const Root& root : roots) {
          if (root.value.is_zero()) continue;
          ++nonzero;
          simple = simple && root.multiplicity == 1 && jordan_type(h, root.value) == std::vector<int>{1};
        }
        c.equal(2, nonzero, tag + " two nonzero eigenvalues");
        c.expect(simple, tag + " nonzero eigenvalues simple");
        const std::vector<CoeffMatrix> family{h};
        c.equal(static_cast<std::size_t>(1), joint_kernel(family).cols(), tag + " dim F_r = 1");
        c.equal(r == 2, is_semisimple(h), tag + " semisimple iff r = 2");
      }
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  c.expect(ms < 60000.0, "runtime under 1 min", "< 60000 ms", std::to_string(ms) + " ms");
}

// ---- 4 ---------------------------------------------------------------------
void suite_banal(Checks& c, const VerifyOptions& o) {
  Draw draw(suite_seed(o, 4));
  const auto start = std::chrono::steady_clock::now();
  for (int n : {2, 3}) {
    for (long p : {2L, 3L}) {
      const BaseField F(p);
      const InvariantBasis basis = enumerate_basis(n, F, n);
      for (long ell : banal_primes(n, F, 2)) {
        const CoeffField f = CoeffField::prime(ell);
        for (int sample = 0; sample < 5; ++sample) {
          std::vector<Coeff> values;
          for (int i = 0; i < n; ++i) values.emplace_back(f, draw.between(1, ell - 1));
          if (sample == 0)
            for (auto& v : values) v = values.front();  // all equal
          if (sample == 1) values[1] = values[0];       // one repeat
          const UnramifiedChar chi(values);
          const std::string tag =
              label(n, p, n) + " ell=" + std::to_string(ell) + " chi=" + join(chi.values());
          const auto family = hecke_family(basis, chi, F);
          const CoeffMatrix kernel = joint_kernel(family);
          const CoeffMatrix local = joint_generalized_nullspace(family, {f, std::nullopt});
          c.equal(static_cast<std::size_t>(1), kernel.cols(), tag + " dim F_n = 1");
          c.equal(static_cast<std::size_t>(1), local.cols(), tag + " dim L_n = 1");
          c.expect(column_span_contains(local, kernel), tag + " F_n inside L_n");
        }
      }
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  c.expect(ms < 300000.0, "runtime under 5 min", "< 300000 ms", std::to_string(ms) + " ms");
}

// ---- 5 ---------------------------------------------------------------------
bool spans_w_infty(const std::vector<TupleVector>& kernel, int n, int M, const CoeffField& f) {
  if (kernel.size() != 1) return false;
  const TupleVector& v = kernel.front();
  const Coeff at_zero = v.at(DominantTuple(static_cast<std::size_t>(n - 1), 0));
  if (at_zero.is_zero()) return false;
  return scale(v, at_zero.inverse()) == w_infty(n, M, f);
}

void suite_kirillov(Checks& c, const VerifyOptions&) {
  for (int n : {2, 3, 4}) {
    for (long p : {2L, 3L, 5L}) {
      const BaseField F(p);
      const std::vector<CoeffField> fields{CoeffField::rationals(),
                                           CoeffField::prime(banal_primes(n, F, 1).front())};
      for (const CoeffField& f : fields)
        for (int M : {4, 6}) {
          const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " M=" +
                                  std::to_string(M) + " over " + f.name();
          const auto kernel = joint_kernel_tuples(n, F, M, f);
          c.equal(static_cast<std::size_t>(1), kernel.size(), tag + " kernel dimension");
          c.expect(spans_w_infty(kernel, n, M, f), tag + " kernel = span{delta_0}");
          const auto next = joint_kernel_tuples(n, F, M + 1, f);
          c.expect(spans_w_infty(next, n, M + 1, f), tag + " stable under M -> M+1");
        }
    }
  }
}

// ---- 6 / 7 -----------------------------------------------------------------
std::vector<UnramifiedChar> rational_chis(Draw& draw, int n, int count, long avoid_ell) {
  const CoeffField Q;
  std::vector<UnramifiedChar> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Coeff> values;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const Rational v = draw.nonzero_rational();
      if (avoid_ell && (val_p(v, avoid_ell) != 0)) ok = false;
      values.emplace_back(Q, v);
    }
    if (ok) out.emplace_back(values);
  }
  return out;
}

void suite_commute(Checks& c, const VerifyOptions& o) {
  Draw draw(suite_seed(o, 6));
  for (long p : {2L, 3L}) {
    const BaseField F(p);
    for (int r : {1, 2}) {
      const InvariantBasis basis = enumerate_basis(3, F, r);
      for (const auto& chi : rational_chis(draw, 3, 3, 0)) {
        const auto family = hecke_family(basis, chi, F);
        c.expect(commute(family[0], family[1]),
                 label(3, p, r) + " chi=" + join(chi.values()) + " U1 U2 = U2 U1");
      }
    }
  }
}

void suite_basechange(Checks& c, const VerifyOptions& o) {
  Draw draw(suite_seed(o, 7));
  for (long p : {2L, 3L}) {
    const BaseField F(p);
    for (int r : {1, 2}) {
      const InvariantBasis basis = enumerate_basis(3, F, r);
      for (long ell : banal_primes(3, F, 2)) {
        const CoeffField f = CoeffField::prime(ell);
        for (const auto& chi : rational_chis(draw, 3, 3, ell)) {
          std::vector<Coeff> reduced;
          for (const Coeff& v : chi.values()) reduced.push_back(v.reduce_to(f));
          const UnramifiedChar chi_mod(reduced);
          for (int j = 1; j <= 2; ++j) {
            const CoeffMatrix over_q = hecke_matrix(basis, j, chi, F).entries;
            const CoeffMatrix native = hecke_matrix(basis, j, chi_mod, F).entries;
            c.expect(reduce_to(over_q, f) == native,
                     label(3, p, r) + " ell=" + std::to_string(ell) + " j=" + std::to_string(j) +
                         " chi=" + join(chi.values()) + " reduction commutes");
          }
        }
      }
    }
  }
}

// ---- 8 ---------------------------------------------------------------------
void suite_level(Checks& c, const VerifyOptions& o) {
  Draw draw(suite_seed(o, 8));
  const CoeffField Q;
  for (long p : {2L, 3L}) {
    const BaseField F(p);
    for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
      const std::string tag = "p=" + std::to_string(p) + " (r,s)=(" + std::to_string(r) + "," +
                              std::to_string(s) + ")";
      const CoeffMatrix e = embedding_matrix(2, F, r, s, Q);
      c.equal(static_cast<std::size_t>(r + 1), rank(e), tag + " embedding has full column rank");
      for (const auto& chi : rational_chis(draw, 2, 2, 0)) {
        const CoeffMatrix hr = hecke_matrix(2, F, r, 1, chi).entries;
        const CoeffMatrix hs = hecke_matrix(2, F, s, 1, chi).entries;
        c.expect(e * hr == hs * e, tag + " chi=" + join(chi.values()) + " E H_r = H_s E");
      }
      const CoeffMatrix proj = projector_matrix(2, F, r, s, UnramifiedChar::trivial(2, Q));
      c.expect(proj * proj == proj, tag + " projector idempotent");
      c.equal(static_cast<std::size_t>(r + 1), rank(proj), tag + " projector rank = dim level r");
      c.expect(proj * e == e, tag + " projector is identity on embedded subspace");
    }
  }
}

// ---- 9 ---------------------------------------------------------------------
void suite_degree(Checks& c, const VerifyOptions&) {
  const CoeffField Q;
  for (int n : {2, 3})
    for (long p : {2L, 3L}) {
      const BaseField F(p);
      for (int r : {1, 2}) {
        const InvariantBasis basis = enumerate_basis(n, F, r);
        const CoeffMatrix ones = column_vector(CoeffVector(basis.size(), Coeff::one(Q)));
        for (int j = 1; j < n; ++j) {
          const CoeffMatrix h = hecke_matrix(basis, j, UnramifiedChar::trivial(n, Q), F).entries;
          const Coeff degree(Q, Rational(coset_degree(n, j, F).value));
          CoeffMatrix expected = ones;
          for (std::size_t i = 0; i < expected.rows(); ++i) expected(i, 0) *= degree;
          c.expect(h * ones == expected,
                   label(n, p, r) + " j=" + std::to_string(j) + " all-ones eigenvalue " +
                       degree.to_string());
        }
      }
    }
}

// ---- 10 --------------------------------------------------------------------
void suite_canonical(Checks& c, const VerifyOptions&) {
  const std::vector<std::pair<long, int>> moduli{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
  for (int n : {2, 3})
    for (auto [p, r] : moduli) {
      const BaseField F(p);
      const auto orbits = oracle::triangular_orbits(n, p, r);
      std::map<std::vector<long>, std::vector<long>> canon_of_orbit, orbit_of_canon;
      bool consistent = true;
      for (const auto& [row, orbit] : orbits) {
        const auto canon = canonical_row(row, F, r).entries;
        const auto a = canon_of_orbit.emplace(orbit, canon).first;
        const auto b = orbit_of_canon.emplace(canon, orbit).first;
        consistent = consistent && a->second == canon && b->second == orbit;
      }
      const std::string tag = "n=" + std::to_string(n) + " p^r=" + std::to_string(F.modulus(r));
      c.expect(consistent, tag + " canonical form separates exactly the orbits");
      c.equal(canon_of_orbit.size(), enumerate_basis(n, F, r).size(),
              tag + " basis size = orbit count");
    }
}

struct SuiteDef {
  std::string name;
  int criterion;
  std::string description;
  std::function<void(Checks&, const VerifyOptions&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"cosets", 1, "coset representatives partition the double coset", suite_cosets},
      {"gaussian", 2, "level-zero degree is a Gaussian binomial", suite_gaussian},
      {"jordan", 3, "GL(2) Jordan form J_{r-1}(0) + two simple eigenvalues", suite_jordan},
      {"banal", 4, "dim F_n = dim L_n = 1 mod banal ell", suite_banal},
      {"kirillov", 5, "Kirillov joint kernel is span{delta_0}", suite_kirillov},
      {"commute", 6, "U-operators commute", suite_commute},
      {"basechange", 7, "Hecke matrices commute with reduction mod ell", suite_basechange},
      {"level", 8, "level change intertwines; projector is the averaging idempotent", suite_level},
      {"degree", 9, "all-ones vector has eigenvalue the coset degree", suite_degree},
      {"canonical", 10, "canonical rows agree with brute-force orbits", suite_canonical},
  };
  return defs;
}

}  // namespace

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.status == CheckStatus::Fail;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& def : suites()) {
    if (def.name != name) continue;
    SuiteResult result{def.name, def.criterion, def.description, {}, 0};
    Checks checks(result);
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(checks, options);
    } catch (const std::exception& e) {
      checks.expect(false, "suite raised an exception", "no exception", e.what());
    }
    result.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::string& name_or_all, const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  if (name_or_all == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  } else {
    out.push_back(run_suite(name_or_all, options));
  }
  return out;
}

std::string format_suite(const SuiteResult& result) {
  std::ostringstream out;
  out << (result.passed() ? "[PASS] " : "[FAIL] ") << result.criterion << ' ' << result.suite
      << ": " << result.description << " (" << result.checks.size() << " checks, "
      << result.failures() << " failed, " << static_cast<long>(result.runtime_ms) << " ms)\n";
  for (const auto& c : result.checks)
    if (c.status == CheckStatus::Fail)
      out << "    FAIL " << c.name << ": expected " << c.expected << ", got " << c.computed << '\n';
  return out.str();
}

nlohmann::json suite_to_json(const SuiteResult& result) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : result.checks) {
    const char* status = c.status == CheckStatus::Pass ? "pass"
                         : c.status == CheckStatus::Fail ? "fail"
                                                         : "skip";
    checks.push_back(
        {{"name", c.name}, {"status", status}, {"expected", c.expected}, {"computed", c.computed}});
  }
  return {{"suite", result.suite},
          {"criterion", result.criterion},
          {"description", result.description},
          {"passed", result.passed()},
          {"runtime_ms", static_cast<long>(result.runtime_ms)},
          {"checks", std::move(checks)}};
}

}  // namespace mirahoric
