#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set; `env` is a
// list of VAR=value assignments placed before the command.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + " " + DMEANS_CLI_PATH + " " + args;
  cmd += merge ? " 2>&1" : " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

double last_field(const std::string& line) {
  return std::stod(line.substr(line.rfind(',') + 1));
}

}  // namespace

TEST_CASE("density grid row count") {
  const Run r = run(R"(density --dist '{"kind":"uniform01"}' --theta 1 --grid 0.01,0.99,99)");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 100);
  CHECK(ls[0] == "x,density");
  CHECK(ls[1].rfind("0.01,", 0) == 0);
}

TEST_CASE("verify suite report") {
  const Run r = run("verify --suite cauchy-stieltjes --dist uniform01 --theta 1");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  for (const auto& c : j["checks"]) {
    CHECK(c["detail"]["abs_error"].get<double>() < 1e-5);
  }
}

TEST_CASE("fidi joint is the product of marginal calls") {
  const Run r = run(
      R"(fidi --theta 1 --cells 0.5,0.5 --at 1.0,2.0 --dist '{"kind":"uniform01"}')");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[3].rfind("joint,", 0) == 0);
  // Each marginal depends on its own abscissa only.
  const Run swapped = run(
      R"(fidi --theta 1 --cells 0.5,0.5 --at 2.0,1.0 --dist '{"kind":"uniform01"}')");
  const auto ss = lines(swapped.out);
  REQUIRE(ss.size() == 4);
  const double m1 = last_field(ls[1]);
  const double m2 = last_field(ss[1]);
  CHECK(last_field(ls[2]) == m2);
  CHECK(last_field(ls[3]) == doctest::Approx(m1 * m2).epsilon(1e-15));
}

TEST_CASE("exit codes") {
  CHECK(run("frobnicate").code == 64);
  CHECK(run("density --no-such-flag").code == 64);
  CHECK(run("--help").code == 0);

  const Run bad = run(R"(psi --dist '{"kind":"lamperti","params":{"alpha":1.5}}' --lambda 1)");
  CHECK(bad.code == 2);
  const Run err = run(R"(psi --dist '{"kind":"lamperti","params":{"alpha":1.5}}' --lambda 1)",
                      true);
  const auto j = nlohmann::json::parse(err.out);
  CHECK(j["error"] == "domain");

  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("catalog eval no_such_law --at 1").code == 2);
}

TEST_CASE("sampling is reproducible and honours the seed") {
  const std::string args = R"(sample --law '{"kind":"uniform01"}' --what mean --theta 1 --n 50)";
  const Run a = run(args + " --seed 5");
  const Run b = run(args + " --seed 5");
  const Run c = run(args + " --seed 6");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(lines(a.out).size() == 51);
  CHECK(run(args, false, "DMEANS_SEED=5").out == a.out);
}

TEST_CASE("catalog listing") {
  const Run r = run("catalog list");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 23);
  const Run e = run("catalog eval u_alpha0 --params alpha=0.5 --at 0.5");
  CHECK(e.code == 0);
  CHECK(last_field(lines(e.out).back()) == doctest::Approx(6.0 / 3.14159265358979324));
}
