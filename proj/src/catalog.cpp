#include "dmeans/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dmeans/errors.hpp"
#include "dmeans/functionals.hpp"
#include "dmeans/montecarlo.hpp"

namespace dmeans {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0,1)");
  }
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("sigma must lie in (0,1]");
  }
}

void check_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be positive");
}

// log(z^2 + 2 z cos(pi a) + 1) for z >= 0 without overflow.
double log_quad(double a, double z) {
  const double c = std::cos(kPi * a);
  if (z > 1.0) {
    const double r = 1.0 / z;
    return 2.0 * std::log(z) + std::log1p(2.0 * c * r + r * r);
  }
  return std::log1p(2.0 * c * z + z * z);
}

// t^{2a+2} + 2 t^{a+1} (1-t)^{a+1} cos(pi a) + (1-t)^{2a+2}, from t and 1-t.
double u_den(double a, double t, double omt) {
  const double p = std::pow(t, a + 1.0);
  const double q = std::pow(omt, a + 1.0);
  return p * p + 2.0 * p * q * std::cos(kPi * a) + q * q;
}

double u_density_pair(double a, double t, double omt) {
  if (!(t > 0.0) || !(omt > 0.0)) return 0.0;
  return std::sin(kPi * a) / (a * kPi) * (a + 1.0) * std::pow(t * omt, a) /
         u_den(a, t, omt);
}

// u^{2a} - 2 (1-u)^a u^a cos(pi a) + (1-u)^{2a}.
double g_den(double a, double u, double omu) {
  const double p = std::pow(u, a);
  const double q = std::pow(omu, a);
  return p * p - 2.0 * p * q * std::cos(kPi * a) + q * q;
}

double g_density_pair(double a, double u, double omu) {
  if (!(u > 0.0) || !(omu > 0.0)) return 0.0;
  return a * std::sin(kPi * a) / ((1.0 - a) * kPi) *
         std::pow(u * omu, a - 1.0) / g_den(a, u, omu);
}

// 1 - (1 - x)^a for 0 <= x <= 1.
double one_minus_pow(double x, double a) {
  return -std::expm1(a * std::log1p(-x));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

SinIdentities sin_identities(double alpha, double z) {
  check_alpha(alpha);
  if (!(z > 0.0)) throw DomainError("sin_identities: z must be positive");
  const double s = std::sin(kPi * alpha);
  const double c = std::cos(kPi * alpha);
  const double q = std::exp(log_quad(alpha, z));
  return {z * s / std::sqrt(q), 2.0 * s * (c + z) / q};
}

double u_alpha0_density(double alpha, double t) {
  check_alpha(alpha);
  return u_density_pair(alpha, t, 1.0 - t);
}

double u_alpha0_cdf(double alpha, double t) {
  check_alpha(alpha);
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return lamperti_cdf(alpha, std::pow(t / (1.0 - t), alpha + 1.0));
}

double phi_u_alpha0(double alpha, double t) {
  check_alpha(alpha);
  if (!(t > 0.0 && t < 1.0)) throw DomainError("phi_u_alpha0: t in (0,1)");
  return std::log(u_den(alpha, t, 1.0 - t)) / (2.0 * alpha) -
         std::log1p(alpha) / alpha;
}

double upsilon_component_density(double alpha, double sigma, double y) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(y > 0.0 && y < 1.0)) return 0.0;
  const double sf = lamperti_cdf(alpha, std::pow((1.0 - y) / y, alpha + 1.0));
  const double s = sin_pi_pair(sigma * sf, 1.0 - sigma + sigma * (1.0 - sf));
  const double log_rest = sigma / alpha * std::log1p(alpha) +
                          (sigma - 1.0) * std::log(y) -
                          sigma / (2.0 * alpha) * std::log(u_den(alpha, y, 1.0 - y));
  return std::exp(log_rest) * s / kPi;
}

double upsilon_alpha_component_density(double alpha, double y) {
  check_alpha(alpha);
  if (!(y > 0.0 && y < 1.0)) return 0.0;
  return std::sin(kPi * alpha) / kPi * (alpha + 1.0) * std::pow(y, alpha - 1.0) *
         std::pow(1.0 - y, alpha + 1.0) / u_den(alpha, y, 1.0 - y);
}

double upsilon_ddag_component_density(double alpha, double sigma, double x) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(x > 0.0)) return 0.0;
  const double z = std::pow(x, alpha + 1.0);
  const double sf = lamperti_cdf(alpha, 1.0 / z);
  const double s = sin_pi_pair(sigma * sf, 1.0 - sigma + sigma * (1.0 - sf));
  const double log_rest = (sigma - 1.0) * std::log(x) +
                          sigma / alpha * std::log1p(x) -
                          sigma / (2.0 * alpha) * log_quad(alpha, z);
  return std::exp(log_rest) * s / kPi;
}

double upsilon_ddag_alpha_density(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 0.0)) return 0.0;
  const double z = std::pow(x, alpha + 1.0);
  return std::sin(kPi * alpha) / kPi *
         std::exp((alpha - 1.0) * std::log(x) + std::log1p(x) -
                  log_quad(alpha, z));
}

double upsilon_ddag_2alpha_density(double alpha, double x) {
  check_alpha(alpha);
  if (alpha > 0.5) {
    throw DomainError("upsilon_ddag_2alpha_density: needs alpha <= 1/2, got " +
                      fmt(alpha));
  }
  if (!(x > 0.0)) return 0.0;
  const double z = std::pow(x, alpha + 1.0);
  return 2.0 * std::sin(kPi * alpha) * (std::cos(kPi * alpha) + z) / kPi *
         std::exp((2.0 * alpha - 1.0) * std::log(x) + 2.0 * std::log1p(x) -
                  2.0 * log_quad(alpha, z));
}

double dk_mean_density(double y) { return dk_component_density(1.0, y); }

double w_mean_density(double x) { return w_component_density(1.0, x); }

double dk_component_density(double sigma, double y) {
  check_sigma(sigma);
  if (!(y > 0.0 && y < 1.0)) return 0.0;
  const double omy = 1.0 - y;
  const double s = sin_pi_pair(sigma * omy, 1.0 - sigma + sigma * y);
  return std::exp(sigma + (sigma * omy - 1.0) * std::log(y) -
                  sigma * omy * std::log(omy)) *
         s / kPi;
}

double w_component_density(double sigma, double x) {
  check_sigma(sigma);
  if (!(x > 0.0)) return 0.0;
  const double u = sigma / (1.0 + x);
  const double s = sin_pi_pair(u, (1.0 - sigma) + sigma * x / (1.0 + x));
  return s / kPi * std::exp((u - 1.0) * std::log(x));
}

double bertoin_G_density(double alpha, double u) {
  check_alpha(alpha);
  return g_density_pair(alpha, u, 1.0 - u);
}

double bertoin_G_cdf(double alpha, double u) {
  check_alpha(alpha);
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return lamperti_cdf(1.0 - alpha, std::pow(u / (1.0 - u), alpha));
}

double inv_G_density(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 1.0)) return 0.0;
  const double v = x - 1.0;
  return lamperti_density(1.0 - alpha, std::pow(v, alpha)) * alpha *
         std::pow(v, alpha - 1.0);
}

double inv_G_cdf(double alpha, double x) {
  check_alpha(alpha);
  if (x <= 1.0) return 0.0;
  return lamperti_cdf(1.0 - alpha, std::pow(x - 1.0, alpha));
}

double phi_inv_G(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 0.0)) throw DomainError("phi_inv_G: x must be positive");
  if (x > 1.0) {
    const double v = x - 1.0;
    const double va = std::pow(v, alpha);
    const double den = va * va - 2.0 * va * std::cos(kPi * alpha) + 1.0;
    return (2.0 * std::log(x) - std::log(den)) / (2.0 * (1.0 - alpha));
  }
  if (x == 1.0) return 0.0;
  return (std::log(x) - std::log(one_minus_pow(x, alpha))) / (1.0 - alpha);
}

double phi_z_pow(double alpha, double z) {
  if (!(z > 0.0)) throw DomainError("phi_z_pow: z must be positive");
  return phi_inv_G(alpha, z + 1.0);
}

double B_alpha_density(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 0.0)) return 0.0;
  const double tail = x <= 1.0 ? one_minus_pow(x, alpha) : 1.0;
  return std::sin(kPi * alpha) / kPi * std::pow(x, -alpha - 1.0) * tail;
}

namespace {

// S = sine * exp(log_mag). The magnitude carries the exponent
// sigma / (2 (1 - alpha)), which overflows alone as alpha -> 1.
struct SParts {
  double sine;
  double log_mag;
};

SParts s_parts(double alpha, double sigma, double z) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(z > 0.0)) throw DomainError("S_function: z must be positive");
  // F_{Z_{1-alpha}}(z^{-alpha}) and its complement F_{Z_{1-alpha}}(z^alpha).
  const double za = std::pow(z, alpha);
  const double f = lamperti_cdf(1.0 - alpha, 1.0 / za);
  const double g = lamperti_cdf(1.0 - alpha, za);
  // z^{2a} - 2 z^a cos(pi a) + 1 is the quadratic form at angle 1 - a.
  return {sin_pi_pair(sigma * f, 1.0 - sigma + sigma * g),
          sigma / (2.0 * (1.0 - alpha)) * log_quad(1.0 - alpha, za)};
}

}  // namespace

double S_function(double alpha, double sigma, double z) {
  const SParts p = s_parts(alpha, sigma, z);
  return p.sine * std::exp(p.log_mag);
}

double D_function(double alpha, double sigma, double x) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(x > 0.0)) throw DomainError("D_function: x must be positive");
  if (x <= 1.0) {
    return std::sin(kPi * sigma) *
           std::pow(one_minus_pow(x, alpha), sigma / (1.0 - alpha));
  }
  return S_function(alpha, sigma, x - 1.0);
}

double bertoin_component_density(double alpha, double sigma, double x) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(x > 0.0)) return 0.0;
  const double k = sigma * alpha / (1.0 - alpha);
  return std::pow(x, -(k + 1.0)) * D_function(alpha, sigma, x) / kPi;
}

double bertoin_tilted_component_density(double alpha, double sigma, double c,
                                        double y) {
  check_alpha(alpha);
  check_sigma(sigma);
  check_c(c);
  if (!(y > 0.0 && y < 1.0)) return 0.0;
  const double k = sigma * alpha / (1.0 - alpha);
  const double cv = c * (1.0 - y);
  const double norm = std::pow(c + 1.0, alpha) - std::pow(c, alpha);
  const double log_rest = k * std::log(cv) -
                          sigma / (1.0 - alpha) * std::log(norm) -
                          (k + 1.0) * std::log(y);
  return std::exp(log_rest) * D_function(alpha, sigma, y / cv) / kPi;
}

double z_subordinator_component_density(double alpha, double sigma, double z) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(z > 0.0)) return 0.0;
  return std::exp((sigma - 1.0) * std::log(z) -
                  sigma / (1.0 - alpha) * std::log1p(z)) *
         S_function(alpha, sigma, z) / kPi;
}

double z_dagger_component_density(double alpha, double sigma, double y) {
  check_alpha(alpha);
  check_sigma(sigma);
  if (!(y > 0.0 && y < 1.0)) return 0.0;
  const double k = sigma * alpha / (1.0 - alpha);
  const double log_rest = -sigma / (1.0 - alpha) * std::log(alpha) +
                          (sigma - 1.0) * std::log(y) + k * std::log1p(-y);
  const SParts p = s_parts(alpha, sigma, y / (1.0 - y));
  return std::exp(log_rest + p.log_mag) * p.sine / kPi;
}

double sigma_alpha_density(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 0.0)) return 0.0;
  return alpha * std::pow(x, -alpha - 1.0) * -std::expm1(-x) /
         std::tgamma(1.0 - alpha);
}

double sigma_dagger_density(double alpha, double c, double x) {
  check_alpha(alpha);
  check_c(c);
  if (!(x > 0.0)) return 0.0;
  const double norm = std::pow(c + 1.0, alpha) - std::pow(c, alpha);
  return sigma_alpha_density(alpha, x) * std::exp(-c * x) / norm;
}

double upsilon_laplace(double alpha, double lambda) {
  check_alpha(alpha);
  if (!(lambda >= 0.0)) throw DomainError("upsilon_laplace: lambda < 0");
  if (lambda == 0.0) return 1.0;
  return lambda * (alpha + 1.0) / std::expm1((alpha + 1.0) * std::log1p(lambda));
}

double z_dagger_laplace(double alpha, double lambda) {
  check_alpha(alpha);
  if (!(lambda >= 0.0)) throw DomainError("z_dagger_laplace: lambda < 0");
  if (lambda == 0.0) return 1.0;
  return std::expm1(alpha * std::log1p(lambda)) / (alpha * lambda);
}

double psi_uniform(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("psi_uniform: lambda < 0");
  if (lambda == 0.0) return 0.0;
  return ((1.0 + lambda) * std::log1p(lambda) - lambda) / lambda;
}

double psi_exp_ratio(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("psi_exp_ratio: lambda < 0");
  if (lambda == 0.0) return 0.0;
  const double d = lambda - 1.0;
  if (std::abs(d) < 1e-4) return 1.0 + d / 2.0 - d * d / 6.0 + d * d * d / 12.0;
  return lambda * std::log(lambda) / d;
}

double psi_inv_G(double alpha, double lambda) {
  check_alpha(alpha);
  if (!(lambda >= 0.0)) throw DomainError("psi_inv_G: lambda < 0");
  if (lambda == 0.0) return 0.0;
  return -std::log(std::pow(lambda + 1.0, alpha) - std::pow(lambda, alpha)) /
         (1.0 - alpha);
}

double phi_uniform(double y) {
  if (!(y > 0.0)) throw DomainError("phi_uniform: y must be positive");
  if (y >= 1.0) {
    // E log(y - U) for y >= 1.
    if (y == 1.0) return -1.0;
    return y * std::log(y) - (y - 1.0) * std::log(y - 1.0) - 1.0;
  }
  return y * std::log(y) + (1.0 - y) * std::log1p(-y) - 1.0;
}

double phi_exp_ratio(double x) {
  if (!(x > 0.0)) throw DomainError("phi_exp_ratio: x must be positive");
  return x / (1.0 + x) * std::log(x);
}

double phi_tilt_exp_ratio(double c, double y) {
  check_c(c);
  if (!(y > 0.0 && y < 1.0)) throw DomainError("phi_tilt_exp_ratio: y in (0,1)");
  const double cv = c * (1.0 - y);
  return y / (cv + y) * std::log(y / cv) - psi_exp_ratio(c) + std::log(cv);
}

DistributionSpec make_u_alpha0(double alpha) {
  check_alpha(alpha);
  DistributionSpec d;
  d.label = "u_alpha0(" + fmt(alpha) + ")";
  d.cdf = [alpha](double t) { return u_alpha0_cdf(alpha, t); };
  d.survival = [alpha](double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return lamperti_cdf(alpha, std::pow((1.0 - t) / t, alpha + 1.0));
  };
  d.density = [alpha](double t) { return u_density_pair(alpha, t, 1.0 - t); };
  d.density_below_upper = [alpha](double v) {
    return u_density_pair(alpha, 1.0 - v, v);
  };
  d.support = {0.0, 1.0};
  d.scale_hint = 0.5;
  d.sampler = [alpha](Rng& rng) { return sample_u_alpha0(alpha, rng); };
  return d;
}

DistributionSpec make_bertoin_G(double alpha) {
  check_alpha(alpha);
  DistributionSpec d;
  d.label = "bertoin_G(" + fmt(alpha) + ")";
  d.cdf = [alpha](double u) { return bertoin_G_cdf(alpha, u); };
  d.survival = [alpha](double u) {
    if (u <= 0.0) return 1.0;
    if (u >= 1.0) return 0.0;
    return lamperti_cdf(1.0 - alpha, std::pow((1.0 - u) / u, alpha));
  };
  d.density = [alpha](double u) { return g_density_pair(alpha, u, 1.0 - u); };
  d.density_above_lower = [alpha](double v) {
    return g_density_pair(alpha, v, 1.0 - v);
  };
  d.density_below_upper = [alpha](double v) {
    return g_density_pair(alpha, 1.0 - v, v);
  };
  d.support = {0.0, 1.0};
  d.scale_hint = 0.5;
  d.sampler = [alpha](Rng& rng) {
    const double z = sample_lamperti(1.0 - alpha, rng);
    return 1.0 / (1.0 + std::pow(z, 1.0 / alpha));
  };
  return d;
}

DistributionSpec make_inv_G(double alpha) {
  check_alpha(alpha);
  DistributionSpec d;
  d.label = "inv_G(" + fmt(alpha) + ")";
  d.cdf = [alpha](double x) { return inv_G_cdf(alpha, x); };
  d.survival = [alpha](double x) {
    if (x <= 1.0) return 1.0;
    return lamperti_cdf(1.0 - alpha, std::pow(x - 1.0, -alpha));
  };
  d.density = [alpha](double x) { return inv_G_density(alpha, x); };
  d.density_above_lower = [alpha](double v) {
    if (!(v > 0.0)) return 0.0;
    return lamperti_density(1.0 - alpha, std::pow(v, alpha)) * alpha *
           std::pow(v, alpha - 1.0);
  };
  d.support = {1.0, kInf};
  d.scale_hint = 1.0;
  d.sampler = [alpha](Rng& rng) {
    return 1.0 + std::pow(sample_lamperti(1.0 - alpha, rng), 1.0 / alpha);
  };
  return d;
}

DistributionSpec make_z_root(double alpha) {
  check_alpha(alpha);
  const double p = alpha + 1.0;
  DistributionSpec d;
  d.label = "z_root(" + fmt(alpha) + ")";
  d.cdf = [alpha, p](double x) {
    return x <= 0.0 ? 0.0 : lamperti_cdf(alpha, std::pow(x, p));
  };
  d.survival = [alpha, p](double x) {
    return x <= 0.0 ? 1.0 : lamperti_cdf(alpha, std::pow(x, -p));
  };
  d.density = [alpha, p](double x) {
    if (!(x > 0.0)) return 0.0;
    return lamperti_density(alpha, std::pow(x, p)) * p * std::pow(x, alpha);
  };
  d.support = {0.0, kInf};
  d.sampler = [alpha, p](Rng& rng) {
    return std::pow(sample_lamperti(alpha, rng), 1.0 / p);
  };
  return d;
}

DistributionSpec make_z_pow(double alpha) {
  check_alpha(alpha);
  const double a = 1.0 - alpha;
  DistributionSpec d;
  d.label = "z_pow(" + fmt(alpha) + ")";
  d.cdf = [a, alpha](double z) {
    return z <= 0.0 ? 0.0 : lamperti_cdf(a, std::pow(z, alpha));
  };
  d.survival = [a, alpha](double z) {
    return z <= 0.0 ? 1.0 : lamperti_cdf(a, std::pow(z, -alpha));
  };
  d.density = [a, alpha](double z) {
    if (!(z > 0.0)) return 0.0;
    return lamperti_density(a, std::pow(z, alpha)) * alpha *
           std::pow(z, alpha - 1.0);
  };
  d.support = {0.0, kInf};
  d.sampler = [a, alpha](Rng& rng) {
    return std::pow(sample_lamperti(a, rng), 1.0 / alpha);
  };
  return d;
}

namespace {

using P = const CatalogParams&;

Support unit(P) { return {0.0, 1.0}; }
Support half_line(P) { return {0.0, kInf}; }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"lamperti", {"alpha"},
               [](P p, double x) { return lamperti_density(p.at("alpha"), x); },
               half_line,
               [](P p, double x) { return lamperti_cdf(p.at("alpha"), x); },
               {},
               [](P p) { return make_lamperti(p.at("alpha")); },
               "Lamperti law Z_alpha = (S/S')^alpha"});
  c.push_back({"u_alpha0", {"alpha"},
               [](P p, double t) { return u_alpha0_density(p.at("alpha"), t); },
               unit,
               [](P p, double t) { return u_alpha0_cdf(p.at("alpha"), t); },
               [](P p, double t) { return phi_u_alpha0(p.at("alpha"), t); },
               [](P p) { return make_u_alpha0(p.at("alpha")); },
               "U_{alpha,0} = Z^{1/(alpha+1)} / (Z^{1/(alpha+1)} + 1)"});
  c.push_back({"upsilon_component", {"alpha", "sigma"},
               [](P p, double y) {
                 return upsilon_component_density(p.at("alpha"), p.at("sigma"), y);
               },
               unit, {}, {}, {},
               "density of M_1(F_{Y_sigma U_{alpha,0}})"});
  c.push_back({"upsilon_alpha_component", {"alpha"},
               [](P p, double y) {
                 return upsilon_alpha_component_density(p.at("alpha"), y);
               },
               unit, {}, {}, {},
               "density of beta_{alpha,1-alpha} U_{alpha,alpha}"});
  c.push_back({"upsilon_ddag_component", {"alpha", "sigma"},
               [](P p, double x) {
                 return upsilon_ddag_component_density(p.at("alpha"),
                                                       p.at("sigma"), x);
               },
               half_line, {}, {}, {},
               "density of M_1(F_{Y_sigma Z_alpha^{1/(alpha+1)}})"});
  c.push_back({"upsilon_ddag_alpha", {"alpha"},
               [](P p, double x) {
                 return upsilon_ddag_alpha_density(p.at("alpha"), x);
               },
               half_line, {}, {}, {},
               "density of M_1(F_{Y_alpha Z_alpha^{1/(alpha+1)}})"});
  c.push_back({"upsilon_ddag_2alpha", {"alpha"},
               [](P p, double x) {
                 return upsilon_ddag_2alpha_density(p.at("alpha"), x);
               },
               half_line, {}, {}, {},
               "density of M_1(F_{Y_{2 alpha} Z_alpha^{1/(alpha+1)}}), alpha <= 1/2"});
  c.push_back({"dk_mean", {},
               [](P, double y) { return dk_mean_density(y); }, unit, {}, {}, {},
               "density of M_1(F_U)"});
  c.push_back({"w_mean", {},
               [](P, double x) { return w_mean_density(x); }, half_line, {}, {},
               {}, "density of M_1(F_W), W = G1/G1'"});
  c.push_back({"dk_component", {"sigma"},
               [](P p, double y) { return dk_component_density(p.at("sigma"), y); },
               unit, {}, {}, {}, "density of M_1(F_{U Y_sigma})"});
  c.push_back({"w_component", {"sigma"},
               [](P p, double x) { return w_component_density(p.at("sigma"), x); },
               half_line, {}, {}, {}, "density of M_1(F_{W Y_sigma})"});
  c.push_back({"bertoin_G", {"alpha"},
               [](P p, double u) { return bertoin_G_density(p.at("alpha"), u); },
               unit,
               [](P p, double u) { return bertoin_G_cdf(p.at("alpha"), u); }, {},
               [](P p) { return make_bertoin_G(p.at("alpha")); },
               "G_alpha with 1/G_alpha = Z_{1-alpha}^{1/alpha} + 1"});
  c.push_back({"inv_G", {"alpha"},
               [](P p, double x) { return inv_G_density(p.at("alpha"), x); },
               [](P) { return Support{1.0, kInf}; },
               [](P p, double x) { return inv_G_cdf(p.at("alpha"), x); },
               [](P p, double x) { return phi_inv_G(p.at("alpha"), x); },
               [](P p) { return make_inv_G(p.at("alpha")); },
               "1/G_alpha"});
  c.push_back({"z_root", {"alpha"},
               [](P p, double x) {
                 const double a = p.at("alpha");
                 return lamperti_density(a, std::pow(x, a + 1.0)) * (a + 1.0) *
                        std::pow(x, a);
               },
               half_line,
               [](P p, double x) {
                 const double a = p.at("alpha");
                 return x <= 0.0 ? 0.0 : lamperti_cdf(a, std::pow(x, a + 1.0));
               },
               {}, [](P p) { return make_z_root(p.at("alpha")); },
               "Z_alpha^{1/(alpha+1)}"});
  c.push_back({"z_pow", {"alpha"},
               [](P p, double z) {
                 const double a = p.at("alpha");
                 if (!(z > 0.0)) return 0.0;
                 return lamperti_density(1.0 - a, std::pow(z, a)) * a *
                        std::pow(z, a - 1.0);
               },
               half_line,
               [](P p, double z) {
                 const double a = p.at("alpha");
                 return z <= 0.0 ? 0.0 : lamperti_cdf(1.0 - a, std::pow(z, a));
               },
               [](P p, double z) { return phi_z_pow(p.at("alpha"), z); },
               [](P p) { return make_z_pow(p.at("alpha")); },
               "Z_{1-alpha}^{1/alpha}"});
  c.push_back({"B_alpha", {"alpha"},
               [](P p, double x) { return B_alpha_density(p.at("alpha"), x); },
               half_line, {}, {}, {},
               "B_alpha = beta_{1-alpha,alpha}/beta_{alpha,1} = M_1(F_{Y_{1-alpha}/G_alpha})"});
  c.push_back({"bertoin_component", {"alpha", "sigma"},
               [](P p, double x) {
                 return bertoin_component_density(p.at("alpha"), p.at("sigma"), x);
               },
               half_line, {}, {}, {}, "density of M_1(F_{Y_sigma/G_alpha})"});
  c.push_back({"bertoin_tilted_component", {"alpha", "sigma", "c"},
               [](P p, double y) {
                 return bertoin_tilted_component_density(
                     p.at("alpha"), p.at("sigma"), p.at("c"), y);
               },
               unit, {}, {}, {},
               "density of M_1(F_{Y_sigma c/(G_alpha + c)})"});
  c.push_back({"z_subordinator_component", {"alpha", "sigma"},
               [](P p, double z) {
                 return z_subordinator_component_density(p.at("alpha"),
                                                         p.at("sigma"), z);
               },
               half_line, {}, {}, {},
               "density of M_1(F_{Y_sigma Z_{1-alpha}^{1/alpha}})"});
  c.push_back({"z_dagger_component", {"alpha", "sigma"},
               [](P p, double y) {
                 return z_dagger_component_density(p.at("alpha"), p.at("sigma"), y);
               },
               unit, {}, {}, {}, "density of M_1(F_{Y_sigma G_alpha})"});
  c.push_back({"sigma_alpha", {"alpha"},
               [](P p, double x) { return sigma_alpha_density(p.at("alpha"), x); },
               half_line, {}, {}, {}, "Sigma_alpha(1) = GGC(1-alpha, F_{1/G_alpha})"});
  c.push_back({"sigma_dagger", {"alpha", "c"},
               [](P p, double x) {
                 return sigma_dagger_density(p.at("alpha"), p.at("c"), x);
               },
               half_line, {}, {}, {}, "Sigma^dagger_{alpha,c}(1)/c"});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

CatalogParams catalog_params(const CatalogEntry& entry,
                             const CatalogParams& given) {
  CatalogParams out;
  for (const auto& name : entry.params) {
    auto it = given.find(name);
    if (it == given.end()) {
      throw DomainError("catalog entry '" + entry.name + "' needs parameter '" +
                        name + "'");
    }
    const double v = it->second;
    if (name == "alpha" && !(v > 0.0 && v < 1.0)) {
      throw DomainError("alpha must lie in (0,1)");
    }
    if (name == "sigma" && !(v > 0.0 && v <= 1.0)) {
      throw DomainError("sigma must lie in (0,1]");
    }
    if (name == "c" && !(v > 0.0)) throw DomainError("c must be positive");
    out[name] = v;
  }
  return out;
}

}  // namespace dmeans
