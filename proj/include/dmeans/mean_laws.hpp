#pragma once

#include "dmeans/dist_core.hpp"
#include "dmeans/functionals.hpp"
#include "dmeans/quadrature.hpp"

namespace dmeans {

/// The law of the Dirichlet mean M_theta(F), with memoised Phi and psi of F.
struct MeanLaw {
  double theta;
  FunctionalsPtr base;

  /// Throws DomainError for theta <= 0 and ExistenceError when psi_F diverges.
  MeanLaw(double theta, const DistributionSpec& spec, QuadratureConfig q = {},
          RealFn phi_closed = {});
  MeanLaw(double theta, FunctionalsPtr functionals);

  const DistributionSpec& spec() const { return base->spec(); }
  const QuadratureConfig& quad() const { return base->quad(); }
};

/// (1/pi) sin(pi theta F(t)) exp(-theta Phi(t)).
double delta_theta(const MeanLaw& law, double t);

/// P(M <= x) from the integral of (x - t)^(theta - 1) Delta_theta(t).
/// Requires theta * m < 1 for every atom mass m (PreconditionError).
/// A value outside [0, 1] beyond tolerance raises NumericalQualityError.
double mean_cdf(const MeanLaw& law, double x);

/// Density for theta = 1: (1/pi) sin(pi F(x)) exp(-Phi(x)).
double mean_density_theta1(const MeanLaw& law, double x);

/// Density for theta > 1: (theta - 1) times the integral of
/// (x - t)^(theta - 2) Delta_theta(t).
double mean_density_theta_gt1(const MeanLaw& law, double x);

/// Density for any theta > 0 from the derivative d_theta of
/// sin(pi theta F) exp(-theta Phi), taken by Richardson-extrapolated central
/// differences. Throws NumericalQualityError when the derivative estimate is
/// too noisy to trust.
double mean_density_general(const MeanLaw& law, double x);

/// Picks the theta = 1, theta > 1 or general formula.
double mean_density(const MeanLaw& law, double x);

/// Integral of (1 + lambda m)^(-theta) against the density of M; should equal
/// exp(-theta psi_F(lambda)).
QuadResult cauchy_stieltjes(const MeanLaw& law, double lambda);

}  // namespace dmeans
