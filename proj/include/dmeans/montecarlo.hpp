#pragma once

#include <cstdint>
#include <vector>

#include "dmeans/dist_core.hpp"
#include "dmeans/subordinators.hpp"

namespace dmeans {

struct SamplerConfig {
  std::uint64_t seed = 20240601;
  double truncation_epsilon = 1e-10;
  long sample_count = 100000;

  /// Throws DomainError unless 0 < epsilon < 1 and sample_count >= 1.
  void validate() const;
};

/// Generator for stream `index` of a master seed. Streams are derived with
/// splitmix64, so workers never share state.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

/// Positive alpha-stable S with E exp(-lambda S) = exp(-lambda^alpha)
/// (Kanter's representation).
double sample_positive_stable(double alpha, Rng& rng);

/// Lamperti variable Z_alpha = (S/S')^alpha, drawn in log space.
double sample_lamperti(double alpha, Rng& rng);

/// One draw of M_theta(F) by stick-breaking with Beta(1, theta) sticks,
/// stopped once the residual mass falls below epsilon; the residual goes to
/// one fresh base draw. A point-mass base returns its location exactly.
double sample_dirichlet_mean(const DistributionSpec& base, double theta,
                             const SamplerConfig& cfg, Rng& rng);

/// One draw of the mean of a PD(alpha, theta) process with uniform base.
/// Sticks are Beta(1 - alpha, theta + k alpha); after the first K sticks the
/// remaining normalised measure is PD(alpha, theta + K alpha), whose mean is
/// drawn exactly as M_{theta + K alpha} of the U_{alpha,0} law.
double sample_pd_mean(double alpha, double theta, const SamplerConfig& cfg,
                      Rng& rng);

/// Draw of U_{alpha,0} = Z^(1/(alpha+1)) / (1 + Z^(1/(alpha+1))).
double sample_u_alpha0(double alpha, Rng& rng);

/// G_theta * M_theta(F).
double sample_ggc(const DistributionSpec& base, double theta,
                  const SamplerConfig& cfg, Rng& rng);

/// Independent GGC(sigma_i, F) increments over the cells of `part`.
std::vector<double> sample_fidi(const DistributionSpec& base,
                                const PartitionSpec& part,
                                const SamplerConfig& cfg, Rng& rng);

/// cfg.sample_count draws of `draw`, using stream 0 of cfg.seed.
std::vector<double> sample_many(const std::function<double(Rng&)>& draw,
                                const SamplerConfig& cfg);

/// One-sample Kolmogorov-Smirnov distance. Sorts a copy of the samples.
double ks_statistic(const std::vector<double>& samples, const RealFn& cdf);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical values at level 0.01 (coefficient 1.63).
double ks_critical(long n);
double ks_critical_two_sample(long n, long m);

struct LaplaceEstimate {
  double value;
  double std_error;
};

/// Sample mean of exp(-lambda x) with its standard error.
LaplaceEstimate empirical_laplace(const std::vector<double>& samples,
                                  double lambda);

/// Cdf of a density tabulated on a grid and integrated cell by cell; the
/// returned handle interpolates linearly between grid nodes, except in the two
/// end cells where it integrates directly. For an infinite
/// upper end the grid lives in u = x/(x + scale).
RealFn tabulate_cdf(const RealFn& density, double lower, double upper,
                    int cells = 2000, double scale = 1.0,
                    const QuadratureConfig& q = {});

}  // namespace dmeans
