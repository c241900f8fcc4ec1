#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "tanint/engine.hpp"
#include "tanint/oracle.hpp"
#include "tanint/render.hpp"
#include "tanint/series.hpp"

// End-to-end tests against the installed binary. TANINT_CLI_PATH is injected
// by the build so the tests always exercise the executable they were built with.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI through /bin/sh and captures stdout. `extra` is prepended
/// verbatim (environment overrides), `redirect` appended (stream plumbing).
RunResult run_cli(const std::string& args, const std::string& extra = "",
                  const std::string& redirect = "2>/dev/null") {
  std::string cmd;
  if (!extra.empty()) cmd += "env " + extra + " ";
  cmd += std::string(TANINT_CLI_PATH) + " " + args;
  if (!redirect.empty()) cmd += " " + redirect;

  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  REQUIRE(status != -1);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir =
      fs::temp_directory_path() / ("tanint-cli-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string expected_text(int n, int p) {
  tanint::MemoTable memo;
  return tanint::render_text(tanint::compute(n, p, memo)) + "\n";
}

}  // namespace

TEST_CASE("version flag") {
  const auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "tanint 0.1.0\n");
}

TEST_CASE("compute text output matches the library renderer") {
  const auto r = run_cli("compute --n 2 --p 1 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-pi^2/32 + pi/4 - ln2/2\n");
  CHECK(r.out == expected_text(2, 1));

  CHECK(run_cli("compute --n 0 --p 0 --quiet").out == "pi/4\n");
  CHECK(run_cli("compute --n 14 --p 1 --quiet").out == expected_text(14, 1));
  CHECK(run_cli("compute --n 9 --p 3 --quiet").out == expected_text(9, 3));
}

TEST_CASE("compute latex output, global flag after subcommand options") {
  const auto r = run_cli("compute --n 2 --p 1 --format latex --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-\\frac{\\pi^2}{32}+\\frac{\\pi}{4}-\\frac{\\ln 2}{2}\n");
}

TEST_CASE("compute json round-trips through the parser") {
  const auto r = run_cli("compute --n 6 --p 2 --format json --quiet");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);

  tanint::MemoTable memo;
  const tanint::SymValue direct = tanint::compute(6, 2, memo);
  CHECK(tanint::SymValue::parse_json(doc.dump()) == direct);
  CHECK(doc.dump() == direct.to_json());
}

TEST_CASE("table csv covers the full rectangle in (p, n) order") {
  const auto r = run_cli("table --n-max 2 --p-max 2 --format csv --quiet");
  CHECK(r.exit_code == 0);

  std::vector<std::string> lines;
  std::string line;
  for (char c : r.out) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line.push_back(c);
    }
  }
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "n,p,value");
  CHECK(lines[1] == "0,0,\"pi/4\"");
  CHECK(lines[4] == "0,1,\"pi^2/32\"");

  tanint::MemoTable memo;
  CHECK(lines[9] ==
        "2,2," + std::string("\"") + tanint::render_text(tanint::compute(2, 2, memo)) + "\"");
}

TEST_CASE("eval honours --digits and matches the library") {
  const auto r = run_cli("eval --n 2 --p 1 --digits 20 --quiet");
  CHECK(r.exit_code == 0);

  tanint::MemoTable memo;
  tanint::NumericContext ctx(20);
  const std::string expected =
      tanint::eval_numeric(tanint::compute(2, 1, memo), ctx).str(20) + "\n";
  CHECK(r.out == expected);
  CHECK(r.out.substr(0, 12) == "0.1303994355");
}

TEST_CASE("jn json reports a valid enclosure") {
  const auto r = run_cli("jn --n 0 --eps 1e-8 --format json --quiet");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 0);
  CHECK(doc["terms_used"].get<int>() > 10);

  const double lo = std::stod(doc["lo"].get<std::string>());
  const double hi = std::stod(doc["hi"].get<std::string>());
  const double ref = -std::log(1.0 - 3.14159265358979323846 / 4.0);
  CHECK(lo <= ref);
  CHECK(ref <= hi);
  CHECK(hi - lo < 1e-8);
}

TEST_CASE("jn text format") {
  const auto r = run_cli("jn --n 3 --eps 1e-6 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 8) == "J_3 in [");
  CHECK(r.out.find("terms_used") != std::string::npos);
}

TEST_CASE("ln matches the library renderer") {
  CHECK(run_cli("ln --n 0 --quiet").out == "1\n");

  tanint::MemoTable memo;
  CHECK(run_cli("ln --n 2 --quiet").out ==
        tanint::render_text(tanint::l_integral(2, memo)) + "\n");
  CHECK(run_cli("ln --n 7 --quiet").out ==
        tanint::render_text(tanint::l_integral(7, memo)) + "\n");
}

TEST_CASE("verify reports all-pass and exits 0") {
  const auto r = run_cli("verify --n-max 2 --p-max 1 --digits 20 --tol 1e-15 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("6/6 passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("compute --n -1 --p 0 --quiet").exit_code == 2);
  CHECK(run_cli("compute --p 0 --quiet").exit_code == 2);
  CHECK(run_cli("eval --n 0 --p 0 --digits 5 --quiet").exit_code == 2);
  CHECK(run_cli("compute --n 0 --p 0 --format yaml --quiet").exit_code == 2);
  CHECK(run_cli("frobnicate --quiet").exit_code == 2);
  CHECK(run_cli("oeis --atom bogus --n-max 3 --offline --quiet").exit_code == 2);
  CHECK(run_cli("oeis --atom ln2 --n-max 3 --normalize raw --offline --quiet").exit_code == 2);
  CHECK(run_cli("jn --n 0 --eps 0 --quiet").exit_code == 2);
}

TEST_CASE("oeis network failures exit 3") {
  const fs::path cache = fresh_dir("net");
  const std::string env =
      "TANINT_CACHE=" + cache.string() + " TANINT_OEIS_URL=http://127.0.0.1:1";

  SUBCASE("offline with a cold cache") {
    CHECK(run_cli("oeis --terms 1,2,3 --offline --quiet", env).exit_code == 3);
  }
  SUBCASE("unreachable server") {
    CHECK(run_cli("oeis --terms 1,2,3 --quiet", env).exit_code == 3);
  }
  fs::remove_all(cache);
}

TEST_CASE("stdout is byte-deterministic across runs") {
  const std::string cmd = "table --n-max 3 --p-max 1 --format json --quiet";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("banner goes to stderr and --quiet removes it") {
  const auto loud = run_cli("compute --n 0 --p 0", "", "2>&1");
  CHECK(loud.exit_code == 0);
  CHECK(loud.out.find("tanint 0.1.0\n") != std::string::npos);

  const auto quiet = run_cli("compute --n 0 --p 0 --quiet", "", "2>&1");
  CHECK(quiet.out == "pi/4\n");

  const auto clean = run_cli("compute --n 0 --p 0");
  CHECK(clean.out == "pi/4\n");
}
