#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Run the tool with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HAUPTMODUL_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify: single id passes with exit code 0") {
  auto r = run_cli("verify --suite qseries --id Q3 --order 8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Q3"));
  CHECK(contains(r.output, "pass"));
}

TEST_CASE("verify: unknown id is a usage error (exit 2)") {
  auto r = run_cli("verify --id NO_SUCH");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "unknown id"));
}

TEST_CASE("verify: id outside the requested suite is a usage error") {
  auto r = run_cli("verify --suite group --id Q1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify: too small an order fails the report, not the process") {
  auto r = run_cli("verify --id Q1 --order 1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "fail"));
}

TEST_CASE("verify: json output carries the report schema") {
  auto r = run_cli("verify --suite qseries --id Q15 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"id\": \"Q15\""));
  CHECK(contains(r.output, "\"suite\": \"qseries\""));
  CHECK(contains(r.output, "\"status\": \"pass\""));
  CHECK(contains(r.output, "\"order\": \"20\""));
  CHECK(contains(r.output, "\"elapsed_ms\""));
}

TEST_CASE("verify: a fast group relation and a numeric id") {
  auto g = run_cli("verify --id G2");
  CHECK(g.exit_code == 0);
  auto n = run_cli("verify --id N6 --tol 1e-10");
  CHECK(n.exit_code == 0);
  CHECK(contains(n.output, "numeric"));
}

TEST_CASE("verify: environment variable sets the default order") {
  const std::string saved_cmd =
      "HAUPTMODUL_DEFAULT_ORDER=6 " + std::string(HAUPTMODUL_BIN) +
      " verify --id Q1 2>&1";
  RunResult r;
  FILE* pipe = popen(saved_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "q^6"));
}

TEST_CASE("expand: j-function and theta constant leading terms") {
  auto j = run_cli("expand --series j --order 1");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.output, "-1: 1"));
  CHECK(contains(j.output, "0: 744"));
  CHECK(contains(j.output, "1: 196884"));

  auto a6 = run_cli("expand --series a6 --order 7");
  CHECK(a6.exit_code == 0);
  CHECK(contains(a6.output, "1/104: 1"));
  CHECK(contains(a6.output, "625/104: -1"));

  auto tau = run_cli("expand --series tau --order 0");
  CHECK(tau.exit_code == 0);
  CHECK(contains(tau.output, "-1: 1"));

  auto bad = run_cli("expand --series no_such_series --order 3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("expand: json schema") {
  auto r = run_cli("expand --series A0_of_a --order 2 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"series\": \"A0_of_a\""));
  CHECK(contains(r.output, "\"exponent\": \"1/4\""));
  CHECK(contains(r.output, "\"coefficient\": \"1\""));
}

TEST_CASE("group: borel subgroup order and index") {
  auto r = run_cli("group --subgroup-borel");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "order: 78"));
  CHECK(contains(r.output, "index: 14"));
}

TEST_CASE("group: exactly one mode must be selected") {
  auto r = run_cli("group");
  CHECK(r.exit_code == 2);
  auto both = run_cli("group --enumerate --relations");
  CHECK(both.exit_code == 2);
}

TEST_CASE("usage: missing subcommand or bad flag exits 2") {
  auto none = run_cli("");
  CHECK(none.exit_code == 2);
  auto flag = run_cli("verify --suite bogus");
  CHECK(flag.exit_code == 2);
}
