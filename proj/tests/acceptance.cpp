// Runs every verification suite once and prints one line per criterion.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "dmeans/verify.hpp"

int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::string>> criteria = {
      {1, "cauchy-stieltjes"},   {2, "beta-scale"},
      {3, "mc-ks"},              {4, "tilt-roundtrip"},
      {5, "phi-crosscheck"},     {6, "fidi-convolution"},
      {7, "catalog-normalization"}, {8, "upsilon-laplace"},
  };
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (const auto& [id, suite] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
      const dmeans::SuiteReport rep = dmeans::run_suite(suite);
      pass = rep.pass();
      char buf[96];
      std::snprintf(buf, sizeof buf, "%zu checks, worst stat/tol %.3g",
                    rep.checks.size(), rep.worst_ratio());
      note = buf;
      if (verbose || !pass) {
        for (const auto& c : rep.checks) {
          if (verbose || !c.pass) {
            std::printf("    %s %-50s stat=%.3e tol=%.1e\n", c.pass ? "ok  " : "FAIL",
                        c.name.c_str(), c.statistic, c.tolerance);
          }
        }
      }
    } catch (const std::exception& e) {
      note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d [%s] %s (%s; %.1fs)\n", id, suite.c_str(),
                pass ? "PASS" : "FAIL", note.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
