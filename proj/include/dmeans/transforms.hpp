#pragma once

#include "dmeans/dist_core.hpp"
#include "dmeans/functionals.hpp"
#include "dmeans/mean_laws.hpp"

namespace dmeans {

/// GGC(theta, F): the law of G_theta * M_theta(F), Levy exponent theta * psi_F.
struct GgcLaw {
  double theta;
  FunctionalsPtr base;

  GgcLaw(double theta, const DistributionSpec& spec, QuadratureConfig q = {},
         RealFn phi_closed = {});
  GgcLaw(double theta, FunctionalsPtr functionals);

  const DistributionSpec& spec() const { return base->spec(); }
  /// exp(-theta psi_F(lambda)).
  double laplace(double lambda) const;
  /// Density via the exponential-mixture integral; theta <= 1 only.
  double density(double x) const;
};

/// Both sides of beta_{theta sigma, theta(1 - sigma)} M_{theta sigma}(F) =
/// M_theta(F_{X Y_sigma}) and of GGC(theta sigma, F) = GGC(theta, F_{X Y_sigma}).
/// beta_b == 0 means the beta factor is identically 1.
struct BetaScalePair {
  MeanLaw left;
  double beta_a;
  double beta_b;
  MeanLaw right;
  GgcLaw ggc_left;
  GgcLaw ggc_right;
};

BetaScalePair beta_scale_identity(const DistributionSpec& base, double theta,
                                  double sigma, QuadratureConfig q = {});

/// Density of beta_{sigma,1-sigma} M_sigma(F) = M_1(F_{X Y_sigma}) at x:
/// x^(sigma-1)/pi * sin(pi sigma (1 - F(x))) * exp(-sigma Phi_F(x)).
double scaled_mean_density(const Functionals& base, double sigma, double x);
double scaled_mean_density(const DistributionSpec& base, double sigma,
                           double x, QuadratureConfig q = {});

/// Density of GGC(sigma, F) at x: integral over y of
/// exp(-x/y) y^(-1) times the scaled mean density at y.
double ggc_component_density(const Functionals& base, double sigma, double x);
double ggc_component_density(const DistributionSpec& base, double sigma,
                             double x, QuadratureConfig q = {});

/// (sin(pi sigma)/pi) * integral over y > 1 of xi_{sigma F}(x y) (y - 1)^(-sigma)
/// minus the scaled mean density at x. sigma = 1 uses the limiting form.
double integral_identity_check(const Functionals& base, double sigma, double x);
double integral_identity_check(const DistributionSpec& base, double sigma,
                               double x, QuadratureConfig q = {});

/// Density of M_theta(F_{A_c}) at y in (0,1), given the density of
/// M_theta(F). A degenerate base has no density and raises ContractError.
double tilt_forward_density(const Functionals& base, double theta, double c,
                            const RealFn& xi_base, double y);
double tilt_forward_density(const DistributionSpec& base, double theta,
                            double c, const RealFn& xi_base, double y,
                            QuadratureConfig q = {});

/// Location of M_theta(F_{A_c}) when F is a point mass at a.
double tilt_forward_location(double a, double c);

/// Density of M_theta(F) at x > 0, given the density of M_theta(F_{A_1}).
double tilt_inverse_density(const Functionals& base, double theta,
                            const RealFn& xi_a1, double x);
double tilt_inverse_density(const DistributionSpec& base, double theta,
                            const RealFn& xi_a1, double x,
                            QuadratureConfig q = {});

/// Esscher transform exp(-t) (1/c) g(t/c) exp(theta psi(c)). `g` defaults to
/// the mixture-integral density of the law.
double tilted_ggc_density(const GgcLaw& ggc, double c, double t,
                          const RealFn& g = {});

/// Density of beta_{sigma,1-sigma} M_sigma(F_{A_c}) at y in (0,1), written
/// through the functionals of F.
double scaled_tilted_density(const Functionals& base, double sigma, double c,
                             double y);
double scaled_tilted_density(const DistributionSpec& base, double sigma,
                             double c, double y, QuadratureConfig q = {});

/// Phi of F_{A_c} at y: Phi_F(y/(c(1-y))) - psi_F(c) + log(c(1-y)).
double phi_tilt(const Functionals& base, double c, double y);
double phi_tilt(const DistributionSpec& base, double c, double y,
                QuadratureConfig q = {});

}  // namespace dmeans
