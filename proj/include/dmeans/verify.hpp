#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmeans/quadrature.hpp"

namespace dmeans {

/// One pass/fail comparison inside a suite.
struct Check {
  std::string name;
  double statistic;  // the measured error or distance
  double tolerance;
  bool pass;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
  /// Worst statistic/tolerance ratio over the checks.
  double worst_ratio() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  /// Descriptor restricting suites that take a base (cauchy-stieltjes).
  std::optional<std::string> dist;
  std::optional<double> theta;
  std::uint64_t seed = 20240601;
  long samples = 100000;
  QuadratureConfig quad{};
};

/// cauchy-stieltjes, beta-scale, mc-ks, tilt-roundtrip, phi-crosscheck,
/// fidi-convolution, catalog-normalization, upsilon-laplace.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace dmeans
