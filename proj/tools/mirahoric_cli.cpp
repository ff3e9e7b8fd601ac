#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirahoric/error.hpp"
#include "mirahoric/serialize.hpp"
#include "mirahoric/verify.hpp"

using namespace mirahoric;

namespace {

// MIRAHORIC_LOG=info|debug turns on progress messages on stderr.
int log_level() {
  static const int level = [] {
    const char* env = std::getenv("MIRAHORIC_LOG");
    if (!env) return 0;
    const std::string v = env;
    return v == "debug" ? 2 : v == "info" ? 1 : 0;
  }();
  return level;
}

void log(int level, const std::string& message) {
  if (log_level() >= level) std::cerr << "mirahoric: " << message << '\n';
}

struct Config {
  int n = 2;
  long p = 2;
  int r = 1;
  int j = 1;
  std::string chi;
  std::optional<long> mod_ell;
  std::optional<long> lambda_ell;
  bool normalized = false;
  bool level_zero = false;
  std::optional<int> check_level;
  int trunc = 4;
  std::string format = "json";
  std::string out;
  std::uint64_t budget = kDefaultBruteForceBudget;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + cfg.out + "' for writing");
  file << text;
}

void emit_json(const Config& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

// Q unless --mod-ell is given or the values are written "a mod ell".
CoeffField coefficient_field(const Config& cfg) {
  if (cfg.mod_ell) return CoeffField::prime(*cfg.mod_ell);
  const auto pos = cfg.chi.find("mod");
  if (pos == std::string::npos) return CoeffField::rationals();
  std::string rest = cfg.chi.substr(pos + 3);
  rest = rest.substr(0, rest.find(','));
  try {
    return CoeffField::prime(std::stol(rest));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "malformed modulus in --chi '" + cfg.chi + "'");
  }
}

UnramifiedChar parse_chi(const Config& cfg) {
  const CoeffField field = coefficient_field(cfg);
  if (cfg.chi.empty()) return UnramifiedChar::trivial(cfg.n, field);
  std::vector<Coeff> values;
  for (const auto& part : split_commas(cfg.chi)) values.push_back(Coeff::parse(part, field));
  if (static_cast<int>(values.size()) != cfg.n)
    throw Error(ErrorKind::InvalidArgument, "--chi needs " + std::to_string(cfg.n) +
                                                " values, got " + std::to_string(values.size()));
  return UnramifiedChar(values, cfg.normalized);
}

int cmd_cosets(const Config& cfg) {
  const BaseField F(cfg.p);
  const LevelKind kind = cfg.level_zero ? LevelKind::Zero : LevelKind::Positive;
  const auto reps = enumerate_mann_reps(cfg.n, cfg.j, F, kind);
  Json out = mann_reps_to_json(cfg.n, cfg.j, F, kind, reps, coset_degree(cfg.n, cfg.j, F, kind));
  if (cfg.check_level) {
    log(1, "brute-force partition check at level " + std::to_string(*cfg.check_level));
    out["partition"] = partition_report_to_json(
        *cfg.check_level, verify_partition(cfg.n, cfg.j, F, *cfg.check_level, cfg.budget));
  }
  emit_json(cfg, out);
  return 0;
}

BasisOptions basis_options(const Config& cfg) {
  BasisOptions options;
  options.lift_seed = cfg.seed;
  options.budget = cfg.budget;
  return options;
}

int cmd_basis(const Config& cfg) {
  const BaseField F(cfg.p);
  emit_json(cfg, basis_to_json(enumerate_basis(cfg.n, F, cfg.r, basis_options(cfg))));
  return 0;
}

int cmd_hecke(const Config& cfg) {
  const BaseField F(cfg.p);
  const UnramifiedChar chi = parse_chi(cfg);
  const InvariantBasis basis = enumerate_basis(cfg.n, F, cfg.r, basis_options(cfg));
  log(1, "basis of size " + std::to_string(basis.size()));
  const HeckeMatrix h = hecke_matrix(basis, cfg.j, chi, F);
  if (cfg.format == "csv")
    emit(cfg, matrix_to_csv(h.entries));
  else
    emit_json(cfg, hecke_to_json(h, basis));
  return 0;
}

int cmd_spectra(const Config& cfg) {
  const BaseField F(cfg.p);
  const UnramifiedChar chi = parse_chi(cfg);
  const AtkinLehnerIdealSpec spec{chi.field(), cfg.lambda_ell};
  emit_json(cfg, report_to_json(spectral_report(cfg.n, F, cfg.r, chi, spec)));
  return 0;
}

int cmd_kirillov(const Config& cfg) {
  const BaseField F(cfg.p);
  const CoeffField field = cfg.mod_ell ? CoeffField::prime(*cfg.mod_ell) : CoeffField::rationals();
  const auto kernel = joint_kernel_tuples(cfg.n, F, cfg.trunc, field);
  Json basis = Json::array();
  for (const auto& v : kernel) basis.push_back(tuple_vector_to_json(v));
  emit_json(cfg, {{"n", cfg.n},
                  {"p", cfg.p},
                  {"M", cfg.trunc},
                  {"field", field.name()},
                  {"dim", kernel.size()},
                  {"kernel", std::move(basis)}});
  return 0;
}

int cmd_verify(const Config& cfg) {
  VerifyOptions options;
  if (cfg.seed) options.seed = *cfg.seed;
  bool ok = true;
  if (cfg.format == "json") {
    Json all = Json::array();
    for (const auto& result : run_suites(cfg.suite, options)) {
      ok = ok && result.passed();
      all.push_back(suite_to_json(result));
    }
    emit_json(cfg, {{"passed", ok}, {"suites", std::move(all)}});
  } else {
    std::string text;
    for (const auto& result : run_suites(cfg.suite, options)) {
      ok = ok && result.passed();
      text += format_suite(result);
      log(1, "finished suite " + result.suite);
    }
    emit(cfg, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Atkin-Lehner U-operators on mirahoric invariants of GL_n(Q_p)"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "write output to PATH instead of stdout");

  auto add_np = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n of GL_n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "residue characteristic")->required();
  };

  auto* cosets = app.add_subcommand("cosets", "Mann coset representatives and degree");
  add_np(cosets);
  cosets->add_option("--j", cfg.j)->required();
  cosets->add_flag("--level-zero", cfg.level_zero, "all j-subsets of {1..n} (r = 0)");
  cosets->add_option("--check-level", cfg.check_level, "brute-force partition check mod p^R");
  cosets->add_option("--budget", cfg.budget);

  auto* basis = app.add_subcommand("basis", "basis of U_1(p^r)-invariants");
  add_np(basis);
  basis->add_option("--r", cfg.r)->required();
  basis->add_option("--seed", cfg.seed, "randomize the coset lifts");
  basis->add_option("--budget", cfg.budget);

  auto* hecke = app.add_subcommand("hecke", "matrix of U^(j)");
  add_np(hecke);
  hecke->add_option("--r", cfg.r)->required();
  hecke->add_option("--j", cfg.j)->required();
  hecke->add_option("--chi", cfg.chi, "comma list: rationals or 'a mod ell'");
  hecke->add_option("--mod-ell", cfg.mod_ell);
  hecke->add_flag("--normalized", cfg.normalized);
  hecke->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  hecke->add_option("--seed", cfg.seed, "randomize the coset lifts");
  hecke->add_option("--budget", cfg.budget);

  auto* spectra = app.add_subcommand("spectra", "spectral report of the U-operators");
  add_np(spectra);
  spectra->add_option("--r", cfg.r)->required();
  spectra->add_option("--chi", cfg.chi, "comma list: rationals or 'a mod ell'");
  spectra->add_option("--mod-ell", cfg.mod_ell);
  spectra->add_flag("--normalized", cfg.normalized);
  spectra->add_option("--lambda-ell", cfg.lambda_ell,
                      "over Q: localize at eigenvalues of positive ell-valuation");

  auto* kirillov = app.add_subcommand("kirillov", "joint kernel in the tuple model");
  add_np(kirillov);
  kirillov->add_option("--trunc", cfg.trunc, "truncation M")->required();
  kirillov->add_option("--mod-ell", cfg.mod_ell);

  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  std::string suite_help = "all";
  for (const auto& name : suite_names()) suite_help += "|" + name;
  verify->add_option("--suite", cfg.suite, suite_help);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] {
    if (verify->count("--format") == 0) cfg.format = "text";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_to_json("invalid_argument", e.what()).dump(2) << '\n';
    return 2;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    log(2, "subcommand " + name);
    if (name == "cosets") return cmd_cosets(cfg);
    if (name == "basis") return cmd_basis(cfg);
    if (name == "hecke") return cmd_hecke(cfg);
    if (name == "spectra") return cmd_spectra(cfg);
    if (name == "kirillov") return cmd_kirillov(cfg);
    return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cout << error_to_json(to_string(e.kind()), e.what()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << error_to_json("internal", e.what()).dump(2) << '\n';
    return 3;
  }
}
