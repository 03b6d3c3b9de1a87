#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "dmeans/dist_core.hpp"
#include "dmeans/functionals.hpp"

namespace dmeans {

/// A base distribution built from a JSON descriptor, together with any
/// closed-form Phi and psi known for it.
struct BuiltDistribution {
  std::shared_ptr<const DistributionSpec> spec;
  RealFn phi_closed;
  RealFn psi_closed;

  FunctionalsPtr functionals(const QuadratureConfig& q = {}) const;
};

/// {"kind": ..., "params": {...}} with kind one of uniform01, point_mass
/// {a}, exp_ratio, lamperti {alpha}, thinned {sigma, base}, tilt_base
/// {c, base} or catalog:<name>. A bare string is read as a kind without
/// parameters. Throws DomainError on anything malformed.
BuiltDistribution build_distribution(const nlohmann::json& j);

/// Parses `text` as JSON, falling back to a bare kind name.
BuiltDistribution parse_distribution(const std::string& text);

}  // namespace dmeans
