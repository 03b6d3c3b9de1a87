#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dmeans/quadrature.hpp"

namespace dmeans {

using RealFn = std::function<double(double)>;
using Rng = std::mt19937_64;
using Sampler = std::function<double(Rng&)>;

struct Atom {
  double location;
  double mass;
};

/// Closed support hull [lower, upper]; upper may be +inf. Lower is >= 0
/// throughout this library.
struct Support {
  double lower = 0.0;
  double upper = kInf;

  bool bounded() const { return upper < kInf; }
};

/// A non-negative base distribution F_X: a continuous part (optional
/// density), explicit atoms, and an optional seeded sampler.
///
/// All function handles are pure and may be called concurrently. Samplers
/// draw from the generator they are handed and hold no state of their own.
struct DistributionSpec {
  std::string label;
  RealFn cdf;
  /// Optional 1 - cdf, evaluated without cancellation in the upper tail.
  RealFn survival;
  /// Density of the continuous part (integrates to 1 - sum of atom masses).
  RealFn density;
  /// Optional: v -> density(upper - v), for supports whose upper end is a
  /// density singularity that x = upper - v cannot resolve in floating point.
  RealFn density_below_upper;
  /// Optional: v -> density(lower + v), same purpose at the lower end.
  RealFn density_above_lower;
  std::vector<Atom> atoms;
  Support support;
  /// Interior points where the density is not smooth.
  std::vector<double> kinks;
  /// Typical magnitude, used to scale infinite-range quadrature.
  double scale_hint = 1.0;
  Sampler sampler;

  bool has_density() const { return static_cast<bool>(density); }
  bool has_sampler() const { return static_cast<bool>(sampler); }
  double atom_mass() const;
  double continuous_mass() const { return 1.0 - atom_mass(); }

  double sf(double x) const { return survival ? survival(x) : 1.0 - cdf(x); }

  /// Density at x given exact distances to the support ends (either may be
  /// +inf when unknown); the endpoint hooks are used near their end.
  double density_at(double x, double from_lower, double from_upper) const;

  /// Finite support endpoints, kinks and atom locations, sorted and
  /// de-duplicated, clipped to [lower, upper].
  std::vector<double> breakpoints() const;

  /// Draws one variate; throws ContractError when no sampler is attached.
  double sample(Rng& rng) const;
};

/// XY_sigma: the base thinned by an independent Bernoulli(sigma) factor.
struct ThinnedSpec : DistributionSpec {
  std::shared_ptr<const DistributionSpec> base;
  double sigma = 1.0;
};

/// A_c = cX / (cX + 1), supported in (0, 1).
struct TiltBaseSpec : DistributionSpec {
  std::shared_ptr<const DistributionSpec> base;
  double c = 1.0;
};

DistributionSpec make_uniform01();
DistributionSpec make_point_mass(double a);
/// Law of W = G1/G1' (ratio of independent unit exponentials).
DistributionSpec make_exp_ratio();
/// Lamperti law Z_alpha = (S_alpha / S'_alpha)^alpha.
DistributionSpec make_lamperti(double alpha);

ThinnedSpec thin(const DistributionSpec& base, double sigma);
TiltBaseSpec tilt_base(const DistributionSpec& base, double c);

struct MonotoneMap {
  RealFn map;
  RealFn inverse;
  /// Derivative of the inverse; enables the change-of-variables density.
  RealFn inverse_derivative;
  /// Image of the support; computed from `map` when not given.
  std::optional<Support> image;
  /// Endpoint hooks for the image density; optional.
  RealFn density_below_upper;
  RealFn density_above_lower;
  std::string label;
};

/// Law of map(X) for a strictly increasing map. The map is probed on a
/// 1000-point grid over the support; a non-increasing step throws
/// ContractError.
DistributionSpec pushforward_monotone(const DistributionSpec& base,
                                      const MonotoneMap& m);

/// Lamperti cdf, accurate in both tails (uses F(1/z) = 1 - F(z)).
double lamperti_cdf(double alpha, double z);
double lamperti_density(double alpha, double z);

}  // namespace dmeans
