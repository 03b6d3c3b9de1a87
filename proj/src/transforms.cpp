#include "dmeans/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dmeans/errors.hpp"

namespace dmeans {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sigma(double sigma, const char* where) {
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError(std::string(where) + ": sigma must lie in (0,1]");
  }
}

void check_c(double c, const char* where) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError(std::string(where) + ": c must be positive and finite");
  }
}

void check_unit(double y, const char* where) {
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError(std::string(where) + ": y must lie in (0,1)");
  }
}

bool point_mass_only(const DistributionSpec& F) {
  return !F.has_density() && F.atoms.size() == 1 && F.atoms[0].mass == 1.0;
}

// sin(pi F_{X Y_sigma}(x)) = sin(pi sigma (1 - F(x))).
double thinned_sine(const Functionals& base, double sigma, double x) {
  const double u = sigma * base.sf(x);
  return sin_pi_pair(u, (1.0 - sigma) + sigma * base.cdf(x));
}

}  // namespace

GgcLaw::GgcLaw(double theta_, const DistributionSpec& spec, QuadratureConfig q,
               RealFn phi_closed)
    : GgcLaw(theta_, make_functionals(spec, q, std::move(phi_closed))) {}

GgcLaw::GgcLaw(double theta_, FunctionalsPtr functionals)
    : theta(theta_), base(std::move(functionals)) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("GgcLaw: theta must be positive and finite");
  }
  if (!base) throw ContractError("GgcLaw: base functionals missing");
  if (!existence_check(base->spec(), base->quad())) {
    throw ExistenceError("GgcLaw: psi diverges for '" + base->spec().label + "'");
  }
}

double GgcLaw::laplace(double lambda) const {
  return std::exp(-theta * base->psi(lambda));
}

double GgcLaw::density(double x) const {
  if (theta > 1.0) {
    throw ContractError("GgcLaw::density: the mixture form needs theta <= 1");
  }
  return ggc_component_density(*base, theta, x);
}

BetaScalePair beta_scale_identity(const DistributionSpec& base, double theta,
                                  double sigma, QuadratureConfig q) {
  check_sigma(sigma, "beta_scale_identity");
  if (!(theta > 0.0)) throw DomainError("beta_scale_identity: theta <= 0");
  auto left = make_functionals(base, q);
  auto right = make_functionals(thin(base, sigma), q);
  return BetaScalePair{MeanLaw(theta * sigma, left),
                       theta * sigma,
                       theta * (1.0 - sigma),
                       MeanLaw(theta, right),
                       GgcLaw(theta * sigma, left),
                       GgcLaw(theta, right)};
}

double scaled_mean_density(const Functionals& base, double sigma, double x) {
  check_sigma(sigma, "scaled_mean_density");
  if (!(x > 0.0)) return 0.0;
  const double s = thinned_sine(base, sigma, x);
  if (s == 0.0) return 0.0;
  return std::pow(x, sigma - 1.0) / kPi * s * std::exp(-sigma * base.phi(x));
}

double scaled_mean_density(const DistributionSpec& base, double sigma,
                           double x, QuadratureConfig q) {
  return scaled_mean_density(*make_functionals(base, q), sigma, x);
}

double ggc_component_density(const Functionals& base, double sigma, double x) {
  check_sigma(sigma, "ggc_component_density");
  if (!(x > 0.0)) return 0.0;
  const DistributionSpec& F = base.spec();
  if (point_mass_only(F)) {
    const double a = F.atoms[0].location;
    if (a == 0.0) {
      throw ContractError("ggc_component_density: GGC of a point mass at 0 "
                          "is degenerate");
    }
    const double z = x / a;
    return std::exp((sigma - 1.0) * std::log(z) - z - std::lgamma(sigma)) / a;
  }
  // The scaled density vanishes above the support, so the y-range is
  // [0, upper]; the exponential factor kills the y -> 0 end.
  std::vector<double> pts{0.0};
  for (double b : F.breakpoints()) {
    if (b > 0.0) pts.push_back(b);
  }
  const double scale = F.support.bounded() ? F.support.upper : F.scale_hint;
  QuadResult total;
  const double ystar = 1e-3 * scale;
  if (x < ystar) {
    // Small x: the layer at y ~ x is too thin for the y-form, so below
    // y* = 1e-3 * scale integrate in u = -log(y), splitting at u = -log(x).
    std::vector<double> upts{-std::log(ystar), -std::log(x)};
    std::vector<double> ypts{ystar};
    for (double b : pts) {
      if (b > 0.0 && b < ystar) upts.push_back(-std::log(b));
      if (b > ystar) ypts.push_back(b);
    }
    std::sort(upts.begin(), upts.end());
    upts.push_back(kInf);
    Integrand h = [&](double u) {
      const double e = std::exp(-x * std::exp(u));
      if (e == 0.0) return 0.0;
      return e * scaled_mean_density(base, sigma, std::exp(-u));
    };
    for (std::size_t i = 0; i + 1 < upts.size(); ++i) {
      if (upts[i + 1] > upts[i]) total += integrate(h, upts[i], upts[i + 1], base.quad());
    }
    pts = ypts;
  }
  if (!F.support.bounded()) pts.push_back(kInf);
  Integrand f = [&](double y) {
    if (!(y > 0.0)) return 0.0;
    const double e = std::exp(-x / y);
    if (e == 0.0) return 0.0;
    return e / y * scaled_mean_density(base, sigma, y);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] > pts[i]) total += integrate(f, pts[i], pts[i + 1], base.quad());
  }
  return total.value;
}

double ggc_component_density(const DistributionSpec& base, double sigma,
                             double x, QuadratureConfig q) {
  return ggc_component_density(*make_functionals(base, q), sigma, x);
}

double integral_identity_check(const Functionals& base, double sigma,
                               double x) {
  check_sigma(sigma, "integral_identity_check");
  if (!(x > 0.0)) throw DomainError("integral_identity_check: x <= 0");
  const double rhs = scaled_mean_density(base, sigma, x);
  const DistributionSpec& F = base.spec();
  // Shared pointer with a no-op deleter: the law only borrows `base`.
  FunctionalsPtr borrowed(&base, [](const Functionals*) {});
  if (sigma == 1.0) {
    return mean_density_theta1(MeanLaw(1.0, borrowed), x) - rhs;
  }
  const MeanLaw law(sigma, borrowed);
  const double lo = F.support.lower;
  const double hi = F.support.upper;
  if (x >= hi) return -rhs;
  // y ranges over [max(1, lo/x), hi/x]; substitute s = (y - 1)^(1 - sigma).
  const double p = 1.0 - sigma;
  auto to_s = [&](double y) { return std::pow(y - 1.0, p); };
  std::vector<double> pts{to_s(std::max(1.0, lo / x))};
  for (double b : F.breakpoints()) {
    const double y = b / x;
    if (y > 1.0 && to_s(y) > pts.front()) pts.push_back(to_s(y));
  }
  if (!F.support.bounded()) pts.push_back(kInf);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Integrand f = [&](double s) {
    const double y = 1.0 + std::pow(s, 1.0 / p);
    return mean_density_general(law, x * y);
  };
  QuadResult total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += integrate(f, pts[i], pts[i + 1], base.quad());
  }
  const double lhs = std::sin(kPi * sigma) / kPi * total.value / p;
  return lhs - rhs;
}

double integral_identity_check(const DistributionSpec& base, double sigma,
                               double x, QuadratureConfig q) {
  return integral_identity_check(*make_functionals(base, q), sigma, x);
}

double tilt_forward_density(const Functionals& base, double theta, double c,
                            const RealFn& xi_base, double y) {
  check_c(c, "tilt_forward_density");
  check_unit(y, "tilt_forward_density");
  if (point_mass_only(base.spec())) {
    throw ContractError(
        "tilt_forward_density: M_theta of a point mass is degenerate; use "
        "tilt_forward_location");
  }
  const double v = 1.0 - y;
  const double xi = xi_base(y / (c * v));
  if (xi == 0.0) return 0.0;
  return std::exp(theta * base.psi(c)) / c * std::pow(v, theta - 2.0) * xi;
}

double tilt_forward_density(const DistributionSpec& base, double theta,
                            double c, const RealFn& xi_base, double y,
                            QuadratureConfig q) {
  return tilt_forward_density(*make_functionals(base, q), theta, c, xi_base, y);
}

double tilt_forward_location(double a, double c) {
  check_c(c, "tilt_forward_location");
  if (!(a >= 0.0)) throw DomainError("tilt_forward_location: a < 0");
  return c * a / (c * a + 1.0);
}

double tilt_inverse_density(const Functionals& base, double theta,
                            const RealFn& xi_a1, double x) {
  if (!(x > 0.0)) return 0.0;
  const double xi = xi_a1(x / (1.0 + x));
  if (xi == 0.0) return 0.0;
  return std::pow(1.0 + x, theta - 2.0) * xi * std::exp(-theta * base.psi(1.0));
}

double tilt_inverse_density(const DistributionSpec& base, double theta,
                            const RealFn& xi_a1, double x, QuadratureConfig q) {
  return tilt_inverse_density(*make_functionals(base, q), theta, xi_a1, x);
}

double tilted_ggc_density(const GgcLaw& ggc, double c, double t,
                          const RealFn& g) {
  check_c(c, "tilted_ggc_density");
  if (!(t > 0.0)) return 0.0;
  const double gv = g ? g(t / c) : ggc.density(t / c);
  if (gv == 0.0) return 0.0;
  return std::exp(-t + ggc.theta * ggc.base->psi(c)) / c * gv;
}

double scaled_tilted_density(const Functionals& base, double sigma, double c,
                             double y) {
  check_sigma(sigma, "scaled_tilted_density");
  check_c(c, "scaled_tilted_density");
  check_unit(y, "scaled_tilted_density");
  const double x = y / (c * (1.0 - y));
  const double s = thinned_sine(base, sigma, x);
  if (s == 0.0) return 0.0;
  const double log_pref = sigma * base.psi(c) + (sigma - 1.0) * std::log(y) -
                          sigma * std::log(c) - sigma * std::log1p(-y) -
                          sigma * base.phi(x);
  return std::exp(log_pref) / kPi * s;
}

double scaled_tilted_density(const DistributionSpec& base, double sigma,
                             double c, double y, QuadratureConfig q) {
  return scaled_tilted_density(*make_functionals(base, q), sigma, c, y);
}

double phi_tilt(const Functionals& base, double c, double y) {
  check_c(c, "phi_tilt");
  check_unit(y, "phi_tilt");
  return base.phi(y / (c * (1.0 - y))) - base.psi(c) + std::log(c) +
         std::log1p(-y);
}

double phi_tilt(const DistributionSpec& base, double c, double y,
                QuadratureConfig q) {
  return phi_tilt(*make_functionals(base, q), c, y);
}

}  // namespace dmeans
