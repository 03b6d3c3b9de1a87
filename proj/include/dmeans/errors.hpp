#pragma once

#include <stdexcept>
#include <string>

namespace dmeans {

/// Argument outside the mathematical domain of an operation (e.g. sigma > 1).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on the inputs does not hold (e.g. an atom with
/// theta * mass >= 1 passed to the cdf formula).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Caller violated an API contract (missing sampler, theta mismatch, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Levy exponent / log-distance functional diverges for this base.
class ExistenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical result failed its own accuracy check.
class NumericalQualityError : public std::runtime_error {
 public:
  NumericalQualityError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace dmeans
