#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "nlhorn/inequalities.hpp"
#include "nlhorn/records.hpp"

using namespace nlhorn;
namespace fs = std::filesystem;

namespace {

#ifndef NLHORN_BIN_PATH
#define NLHORN_BIN_PATH ""
#endif

std::string cli_binary() {
  if (const char* env = std::getenv("NLHORN_BIN"); env && *env) return env;
  return NLHORN_BIN_PATH;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_binary() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// a scratch cwd-independent cache directory per test case
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("nlhorn-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("cli arithmetic commands") {
  REQUIRE_FALSE(cli_binary().empty());
  REQUIRE(fs::exists(cli_binary()));

  auto lr = run_cli("lr 2,1 2,1 3,2,1");
  CHECK(lr.exit_code == 0);
  CHECK(lr.output == "2\n");

  CHECK(run_cli("lr 1 \"\" 1").output == "1\n");
  CHECK(run_cli("lr 1 1 3").output == "0\n");
  CHECK(run_cli("nl 1 1 \"\"").output == "1\n");
  CHECK(run_cli("nl 2 1 1").output == "1\n");
  CHECK(run_cli("tau \"{2,4}\"").output == "2,1\n");
}

TEST_CASE("cli rejects malformed input") {
  CHECK(run_cli("lr 1,x 1 1").exit_code == 2);
  CHECK(run_cli("lr 2,3 1 1").exit_code == 2);       // not weakly decreasing
  CHECK(run_cli("tau \"{3,1}\"").exit_code == 2);    // not increasing
  CHECK(run_cli("gen --family nonsense").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli generation is idempotent and cached") {
  TempDir tmp;
  const std::string common = "gen --n 2 --family extended --cache '" + tmp.str() + "'";
  const auto first = run_cli(common + " --out '" + (tmp.path / "a.records").string() + "'");
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(tmp.path / "g2-extended-v1.records"));

  const auto second = run_cli(common + " --out '" + (tmp.path / "b.records").string() + "'");
  CHECK(second.exit_code == 0);
  CHECK(read_file(tmp.path / "a.records") == read_file(tmp.path / "b.records"));

  // reload through the library and compare against a fresh enumeration
  const auto loaded = set_from_records(read_file(tmp.path / "a.records"));
  CHECK(to_records(loaded) == to_records(enumerate_extended(2)));

  // a corrupt cache entry is rebuilt rather than trusted
  write_file_atomic(tmp.path / "g2-extended-v1.records", "garbage\n");
  const auto third = run_cli(common + " --out '" + (tmp.path / "c.records").string() + "'");
  CHECK(third.exit_code == 0);
  CHECK(read_file(tmp.path / "a.records") == read_file(tmp.path / "c.records"));
  CHECK(read_file(tmp.path / "g2-extended-v1.records") != "garbage\n");
}

TEST_CASE("cli verify is clean and jobs-independent on real families") {
  TempDir tmp;
  const std::string base =
      "verify --n 2 --max-size 6 --cache '" + tmp.str() + "' --out '";
  const auto one = run_cli(base + (tmp.path / "j1.txt").string() + "' --jobs 1");
  const auto four = run_cli(base + (tmp.path / "j4.txt").string() + "' --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);

  const std::string a = read_file(tmp.path / "j1.txt");
  const std::string b = read_file(tmp.path / "j4.txt");
  CHECK(a.substr(a.find('\n')) == b.substr(b.find('\n')));  // header holds wall time
}

TEST_CASE("cli surfaces findings through the exit code") {
  // plant a false inequality in the cache: mu_1 <= 0 at n=1
  TempDir tmp;
  InequalitySet rigged;
  rigged.n = 1;
  rigged.family = "extended";
  IneqRecord r;
  r.coeffs = {-1, 0, 0};
  GTuple t{IndexSet({1}, 1), IndexSet({}, 1), IndexSet({}, 1),
           IndexSet({1}, 1), IndexSet({1}, 1), IndexSet({}, 1)};
  r.provenance.push_back(t);
  rigged.records.push_back(r);
  write_file_atomic(tmp.path / "g1-extended-v1.records", to_records(rigged));

  const auto run = run_cli("verify --n 1 --max-size 2 --cache '" + tmp.str() + "'");
  CHECK(run.exit_code == 1);
  CHECK(run.output.find("\"kind\":\"breach\"") != std::string::npos);

  const auto checked = run_cli("check 1 1 \"\" --n 1 --cache '" + tmp.str() + "'");
  CHECK(checked.exit_code == 1);
  CHECK(checked.output.find("classification: breach") != std::string::npos);
}

TEST_CASE("cli scale guards") {
  TempDir tmp;
  CHECK(run_cli("verify --n 5 --max-size 2 --cache '" + tmp.str() + "'").exit_code == 3);
  CHECK(run_cli("gen --n 5 --cache '" + tmp.str() + "'").exit_code == 3);
  CHECK(run_cli("redundant --n 4 --cache '" + tmp.str() + "'").exit_code == 3);
  CHECK(run_cli("saturate --n 6 --max-size 2 --cache '" + tmp.str() + "'").exit_code == 3);
}

TEST_CASE("cli saturation and rowcol runs") {
  TempDir tmp;
  const auto sat = run_cli("saturate --n 2 --max-size 4 --t-max 3 --jobs 2");
  CHECK(sat.exit_code == 0);
  CHECK(sat.output.find("\"kind\":\"saturation\"") != std::string::npos);
  CHECK(sat.output.find("\"counterexamples\":0") != std::string::npos);

  const auto rc = run_cli("verify --n 2 --max-size 4 --rowcol --cache '" + tmp.str() + "'");
  CHECK(rc.exit_code == 0);
  CHECK(rc.output.find("\"kind\":\"conjecture\"") != std::string::npos);
  CHECK(rc.output.find("\"kind\":\"rowcol\"") != std::string::npos);
}

TEST_CASE("cli output formats and views") {
  TempDir tmp;
  const auto csv = run_cli("gen --n 1 --format csv --cache '" + tmp.str() + "'");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.substr(0, csv.output.find('\n')) == "n,family,trivial,m1,n1,l1");

  const auto orbits = run_cli("gen --n 2 --orbits --cache '" + tmp.str() + "'");
  CHECK(orbits.exit_code == 0);
  // 18 vectors collapse to the 4 published orbits (plus the header line)
  CHECK(std::count(orbits.output.begin(), orbits.output.end(), '\n') == 5);

  const auto merged = run_cli("gen --n 1 --family horn --family subset-sum --cache '" +
                              tmp.str() + "'");
  CHECK(merged.exit_code == 0);
  CHECK(merged.output.find("\"family\":\"all\"") != std::string::npos);
}
