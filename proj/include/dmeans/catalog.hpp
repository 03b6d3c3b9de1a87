#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmeans/dist_core.hpp"

namespace dmeans {

// Closed-form laws. Notation: Z_a is the Lamperti variable, U_{a,0} the mean
// of a PD(a, 0) process with uniform base, G_a the Bertoin et al. variable on
// (0,1), W = G1/G1'. Parameters: 0 < alpha < 1, 0 < sigma <= 1, c > 0.

struct SinIdentities {
  double s1;  // sin(pi alpha F_Z(z)) = z sin(pi alpha) / sqrt(z^2 + 2 z cos + 1)
  double s2;  // sin(2 pi alpha (1 - F_Z(z)))
};
SinIdentities sin_identities(double alpha, double z);

double u_alpha0_density(double alpha, double t);
double u_alpha0_cdf(double alpha, double t);
/// Phi of the U_{alpha,0} law.
double phi_u_alpha0(double alpha, double t);

/// Density of M_1(F_{Y_sigma U_{alpha,0}}) on (0,1).
double upsilon_component_density(double alpha, double sigma, double y);
/// The sigma = alpha case in its reduced form.
double upsilon_alpha_component_density(double alpha, double y);

/// Density of M_1(F_{Y_sigma Z_alpha^{1/(alpha+1)}}) on (0, inf).
double upsilon_ddag_component_density(double alpha, double sigma, double x);
/// sigma = alpha reduced form.
double upsilon_ddag_alpha_density(double alpha, double x);
/// sigma = 2 alpha reduced form; needs alpha <= 1/2.
double upsilon_ddag_2alpha_density(double alpha, double x);

double dk_mean_density(double y);
double w_mean_density(double x);
double dk_component_density(double sigma, double y);
double w_component_density(double sigma, double x);

double bertoin_G_density(double alpha, double u);
double bertoin_G_cdf(double alpha, double u);
double inv_G_density(double alpha, double x);
double inv_G_cdf(double alpha, double x);
/// Phi of the 1/G_alpha law (two branches split at x = 1).
double phi_inv_G(double alpha, double x);
/// Phi of Z_{1-alpha}^{1/alpha}, equal to phi_inv_G(alpha, z + 1).
double phi_z_pow(double alpha, double z);

/// Density of B_alpha = M_1(F_{Y_{1-alpha}/G_alpha}).
double B_alpha_density(double alpha, double x);

double S_function(double alpha, double sigma, double z);
double D_function(double alpha, double sigma, double x);

/// Density of M_1(F_{Y_sigma / G_alpha}).
double bertoin_component_density(double alpha, double sigma, double x);
/// Density of M_1(F_{Y_sigma c/(G_alpha + c)}) on (0,1).
double bertoin_tilted_component_density(double alpha, double sigma, double c,
                                        double y);
/// Density of M_1(F_{Y_sigma Z_{1-alpha}^{1/alpha}}).
double z_subordinator_component_density(double alpha, double sigma, double z);
/// Density of M_1(F_{Y_sigma G_alpha}) on (0,1).
double z_dagger_component_density(double alpha, double sigma, double y);

/// Density of Sigma_alpha(1) = GGC(1 - alpha, F_{1/G_alpha}).
double sigma_alpha_density(double alpha, double x);
/// Density of Sigma^dagger_{alpha,c}(1) / c.
double sigma_dagger_density(double alpha, double c, double x);

/// E exp(-lambda Upsilon_alpha(1)) = lambda (alpha+1) / ((lambda+1)^(alpha+1) - 1).
double upsilon_laplace(double alpha, double lambda);
/// ((lambda + 1)^alpha - 1) / (alpha lambda).
double z_dagger_laplace(double alpha, double lambda);

double psi_uniform(double lambda);
double psi_exp_ratio(double lambda);
double psi_inv_G(double alpha, double lambda);
double phi_uniform(double y);
double phi_exp_ratio(double x);
/// Phi of A_c built from W, with a series branch for |c - 1| < 1e-4.
double phi_tilt_exp_ratio(double c, double y);

DistributionSpec make_u_alpha0(double alpha);
DistributionSpec make_bertoin_G(double alpha);
DistributionSpec make_inv_G(double alpha);
/// Z_alpha^{1/(alpha+1)}.
DistributionSpec make_z_root(double alpha);
/// Z_{1-alpha}^{1/alpha}.
DistributionSpec make_z_pow(double alpha);

using CatalogParams = std::map<std::string, double>;

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::function<double(const CatalogParams&, double)> density;
  std::function<Support(const CatalogParams&)> support;
  std::function<double(const CatalogParams&, double)> cdf;  // may be empty
  std::function<double(const CatalogParams&, double)> phi;  // may be empty
  /// Base distribution built from the entry, when it is one.
  std::function<DistributionSpec(const CatalogParams&)> spec;
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
/// Throws DomainError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);
/// Reads the entry's parameters from `given`; throws DomainError when one is
/// missing or out of range.
CatalogParams catalog_params(const CatalogEntry& entry,
                             const CatalogParams& given);

}  // namespace dmeans
