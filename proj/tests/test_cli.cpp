#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MIRAHORIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cosets") {
  auto r = run("cosets --n 2 --j 1 --p 3");
  CHECK(r.status == 0);
  CHECK(json_of(r).at("reps").size() == 3);
  CHECK(json_of(r).at("degree") == "3");
  CHECK(json_of(run("cosets --n 3 --j 1 --p 2")).at("reps").size() == 6);
  CHECK(json_of(run("cosets --n 2 --j 1 --p 3 --level-zero")).at("reps").size() == 4);
  const auto checked = json_of(run("cosets --n 3 --j 1 --p 2 --check-level 1"));
  CHECK(checked.at("partition").at("oracle_index") == "6");
}

TEST_CASE("spectra") {
  const auto j = json_of(run("spectra --n 2 --p 3 --r 3 --chi 1,2"));
  CHECK(j.at("dim") == 4);
  CHECK(j.at("jordan").at("0") == nlohmann::json::array({2}));
  const auto m = json_of(run("spectra --n 2 --p 2 --r 2 --chi '3 mod 5,4 mod 5'"));
  CHECK(m.at("params").at("field") == "F_5");
  CHECK(m.at("dim_L") == 1);
}

TEST_CASE("kirillov") {
  const auto j = json_of(run("kirillov --n 3 --trunc 4 --p 2"));
  CHECK(j.at("dim") == 1);
  CHECK(j.at("kernel")[0].at("entries").dump() == R"([{"c":"1","m":[0,0]}])");
}

TEST_CASE("hecke") {
  const auto r = run("hecke --n 2 --p 3 --r 2 --j 1 --chi 1,1 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "1,2,0\n0,0,3\n0,0,3\n");
  const auto j = json_of(run("hecke --n 2 --p 3 --r 2 --j 1 --chi 1,1"));
  CHECK(j.at("matrix").size() == 3);
  CHECK(run("hecke --n 3 --p 2 --r 2 --j 2 --chi 1,2,3 --seed 9").out ==
        run("hecke --n 3 --p 2 --r 2 --j 2 --chi 1,2,3").out);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const char* args : {"spectra --n 3 --p 2 --r 2 --chi 1,2,3 --mod-ell 5",
                           "basis --n 3 --p 3 --r 2", "cosets --n 4 --j 2 --p 2"})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes a file") {
  const std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  const auto r = run("--out " + path + " basis --n 2 --p 2 --r 3");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(nlohmann::json::parse(s.str()).at("dim") == 4);
}

TEST_CASE("errors are machine readable") {
  auto r = run("hecke --n 2 --p 4 --r 1 --j 1");
  CHECK(r.status == 2);
  CHECK(json_of(r).at("error").at("kind") == "not_prime");
  r = run("hecke --n 2 --p 3 --r 1 --j 1 --chi 1,2,3");
  CHECK(json_of(r).at("error").at("kind") == "invalid_argument");
  r = run("spectra --n 2 --p 3 --r 2 --chi 1,1 --normalized");
  CHECK(json_of(r).at("error").at("kind") == "no_half_powers");
  r = run("cosets --n 2 --p 3");
  CHECK(r.status == 2);
  CHECK(json_of(r).at("error").at("kind") == "invalid_argument");
  r = run("frobnicate");
  CHECK(r.status == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --suite cosets");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("[PASS] 1 cosets", 0) == 0);
  r = run("verify --suite degree --format json");
  CHECK(json_of(r).at("passed") == true);
  CHECK(run("verify --suite nope").status == 2);
}
