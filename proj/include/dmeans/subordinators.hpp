#pragma once

#include <vector>

#include "dmeans/transforms.hpp"

namespace dmeans {

/// Disjoint cells of (0, 1/theta], stored by length only: the increments of
/// a subordinator over cells depend on the lengths, not on the positions.
struct PartitionSpec {
  double theta;
  std::vector<double> cells;

  /// sigma_i = theta * |C_i|.
  std::vector<double> sigmas() const;
  /// Throws PreconditionError unless the lengths are positive and sum to
  /// 1/theta within 1e-12.
  void validate() const;
};

/// E exp(-lambda zeta_theta(t)) = exp(-t theta psi_F(lambda)).
double ggc_laplace(const GgcLaw& ggc, double t, double lambda);

struct FidiResult {
  double joint;
  std::vector<double> marginals;
};

/// Joint density of the increments over the cells at xs: the product of the
/// GGC(sigma_i, F) densities. Requires part.theta == ggc.theta.
FidiResult fidi_density(const GgcLaw& ggc, const PartitionSpec& part,
                        const std::vector<double>& xs);

struct ConvolutionReport {
  double max_abs_residual;
  double at_x;
  std::vector<double> grid;
  std::vector<double> convolved;
  std::vector<double> direct;
};

/// Sup-norm gap between g_{sigma1} * g_{sigma2} (numerical convolution) and
/// g_{sigma1 + sigma2} on `points` equally spaced abscissae in (0, x_max].
ConvolutionReport convolution_check(const Functionals& base, double sigma1,
                                    double sigma2, int points = 200,
                                    double x_max = 10.0);
ConvolutionReport convolution_check(const DistributionSpec& base,
                                    double sigma1, double sigma2,
                                    int points = 200, double x_max = 10.0,
                                    QuadratureConfig q = {});

}  // namespace dmeans
