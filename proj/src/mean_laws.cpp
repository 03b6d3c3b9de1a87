#include "dmeans/mean_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dmeans/errors.hpp"

namespace dmeans {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCdfSlack = 1e-7;
constexpr double kDerivativeRelTol = 1e-3;
constexpr double kDerivativeNoiseFloor = 1e-10;
constexpr int kRiddersLevels = 10;
constexpr double kRiddersShrink = 1.4;
constexpr double kEndCell = 1e-2;
constexpr double kTailStart = 1e2;

bool single_atom(const DistributionSpec& F) {
  return !F.has_density() && F.atoms.size() == 1 && F.atoms[0].mass == 1.0;
}

// h(t) = sin(pi theta F(t)) exp(-theta Phi(t)).
double h_theta(const MeanLaw& law, double t) {
  if (t <= 0.0 && law.spec().support.lower >= 0.0 && law.spec().cdf(t) == 0.0) {
    return 0.0;
  }
  const double F = law.spec().cdf(t);
  if (F <= 0.0) return 0.0;
  const double u = law.theta * F;
  const double s = sin_pi_pair(u, 1.0 - law.theta + law.theta * law.spec().sf(t));
  if (s == 0.0) return 0.0;
  return s * std::exp(-law.theta * law.base->phi(t));
}

// Breakpoints of the base strictly below x, plus the lower support end.
std::vector<double> breaks_below(const DistributionSpec& F, double x) {
  std::vector<double> out;
  for (double b : F.breakpoints()) {
    if (b < x) out.push_back(b);
  }
  return out;
}

// Integral over t in [lo, x] of (x - t)^(gamma) g(t) dt with gamma > -1,
// computed as (1/(gamma+1)) times the integral over s of g(x - s^(1/(gamma+1)))
// with s = (x - t)^(gamma+1). Pieces follow the base breakpoints.
QuadResult kernel_integral(const DistributionSpec& F, double x, double gamma,
                           const std::function<double(double)>& g,
                           const QuadratureConfig& q) {
  const double p = gamma + 1.0;
  std::vector<double> bs = breaks_below(F, x);
  std::vector<double> s_pts{0.0};
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    s_pts.push_back(std::pow(x - *it, p));
  }
  std::sort(s_pts.begin(), s_pts.end());
  s_pts.erase(std::unique(s_pts.begin(), s_pts.end()), s_pts.end());
  Integrand f = [&](double s) { return g(x - std::pow(s, 1.0 / p)); };
  QuadResult r = integrate_pieces(f, s_pts, q);
  r.value /= p;
  r.error /= p;
  return r;
}

void check_atoms(const MeanLaw& law) {
  for (const auto& a : law.spec().atoms) {
    if (law.theta * a.mass >= 1.0) {
      std::ostringstream os;
      os.precision(17);
      os << "mean_cdf: atom at " << a.location << " with mass " << a.mass
         << " has theta*mass >= 1";
      throw PreconditionError(os.str());
    }
  }
}

}  // namespace

MeanLaw::MeanLaw(double theta_, const DistributionSpec& spec,
                 QuadratureConfig q, RealFn phi_closed)
    : MeanLaw(theta_, make_functionals(spec, q, std::move(phi_closed))) {}

MeanLaw::MeanLaw(double theta_, FunctionalsPtr functionals)
    : theta(theta_), base(std::move(functionals)) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("MeanLaw: theta must be positive and finite");
  }
  if (!base) throw ContractError("MeanLaw: base functionals missing");
  if (!existence_check(base->spec(), base->quad())) {
    throw ExistenceError("MeanLaw: psi diverges for '" + base->spec().label +
                         "'");
  }
}

double delta_theta(const MeanLaw& law, double t) {
  if (t <= 0.0) return 0.0;
  return h_theta(law, t) / kPi;
}

double mean_cdf(const MeanLaw& law, double x) {
  check_atoms(law);
  const DistributionSpec& F = law.spec();
  if (single_atom(F)) return x >= F.atoms[0].location ? 1.0 : 0.0;
  if (x <= F.support.lower) return 0.0;
  const QuadResult r = kernel_integral(
      F, x, law.theta - 1.0, [&law](double t) { return delta_theta(law, t); },
      law.quad());
  if (!std::isfinite(r.value) || r.value < -kCdfSlack ||
      r.value > 1.0 + kCdfSlack) {
    throw NumericalQualityError("mean_cdf: value outside [0,1]", r.value);
  }
  return r.value;
}

double mean_density_theta1(const MeanLaw& law, double x) {
  if (law.theta != 1.0) {
    throw ContractError("mean_density_theta1 requires theta = 1");
  }
  if (x <= 0.0) return 0.0;
  return delta_theta(law, x);
}

double mean_density_theta_gt1(const MeanLaw& law, double x) {
  if (!(law.theta > 1.0)) {
    throw ContractError("mean_density_theta_gt1 requires theta > 1");
  }
  const DistributionSpec& F = law.spec();
  if (x <= F.support.lower) return 0.0;
  // (theta - 1) cancels the 1/(gamma + 1) of the substitution.
  const QuadResult r = kernel_integral(
      F, x, law.theta - 2.0, [&law](double t) { return delta_theta(law, t); },
      law.quad());
  return r.value * (law.theta - 1.0);
}

double mean_density_general(const MeanLaw& law, double x) {
  const DistributionSpec& F = law.spec();
  // M lies in [lower, upper]; the endpoints themselves carry no density.
  if (x <= F.support.lower || x >= F.support.upper) return 0.0;
  const std::vector<double> breaks = F.breakpoints();
  double worst_rel = 0.0;
  double worst_abs = 0.0;

  auto derivative = [&](double t) {
    double nearest = kInf;
    for (double b : breaks) nearest = std::min(nearest, std::abs(t - b));
    const double cap = 0.02 * std::max(1.0, std::abs(t));
    const double step = std::min(cap, 0.5 * nearest);
    if (!(step > 0.0)) return 0.0;
    auto central = [&](double hstep) {
      return (h_theta(law, t + hstep) - h_theta(law, t - hstep)) / (2.0 * hstep);
    };
    // Ridders: Neville table over steps shrinking by kRiddersShrink; keep the
    // entry with the smallest error estimate, stop once the error grows.
    double table[kRiddersLevels][kRiddersLevels];
    double hstep = step;
    table[0][0] = central(hstep);
    double value = table[0][0];
    double err = kInf;
    for (int i = 1; i < kRiddersLevels; ++i) {
      hstep /= kRiddersShrink;
      table[0][i] = central(hstep);
      double fac = kRiddersShrink * kRiddersShrink;
      for (int j = 1; j <= i; ++j) {
        table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
        fac *= kRiddersShrink * kRiddersShrink;
        const double e = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                  std::abs(table[j][i] - table[j - 1][i - 1]));
        if (e <= err) {
          err = e;
          value = table[j][i];
        }
      }
      if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * err) break;
    }
    // Only interior nodes count toward the quality verdict; nodes hugging a
    // breakpoint carry negligible weight.
    if (step == cap && std::isfinite(err)) {
      worst_rel = std::max(worst_rel, err / std::max(std::abs(value), 1.0));
      worst_abs = std::max(worst_abs, err);
    }
    return value;
  };

  // Difference quotients next to a breakpoint carry rounding noise of order
  // eps / distance; the absolute floor keeps the adaptive rule from chasing it.
  QuadratureConfig q = law.quad();
  q.abs_tol = std::max(q.abs_tol, kDerivativeNoiseFloor);
  const QuadResult r = kernel_integral(F, x, law.theta - 1.0, derivative, q);
  if (worst_rel > kDerivativeRelTol) {
    throw NumericalQualityError(
        "mean_density_general: derivative of sin(pi theta F) exp(-theta Phi) "
        "is too noisy",
        worst_abs);
  }
  return r.value / kPi;
}

double mean_density(const MeanLaw& law, double x) {
  if (law.theta == 1.0) return mean_density_theta1(law, x);
  if (law.theta > 1.0) return mean_density_theta_gt1(law, x);
  return mean_density_general(law, x);
}

QuadResult cauchy_stieltjes(const MeanLaw& law, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("cauchy_stieltjes: lambda < 0");
  const DistributionSpec& F = law.spec();
  if (single_atom(F)) {
    QuadResult r;
    r.value = std::pow(1.0 + lambda * F.atoms[0].location, -law.theta);
    return r;
  }
  // M lives in the convex hull of the support.
  std::vector<double> pts = F.breakpoints();
  if (!F.support.bounded()) pts.push_back(kInf);
  const double theta = law.theta;
  Integrand f = [&](double m) {
    if (m <= 0.0 || m >= F.support.upper) return 0.0;
    return std::pow(1.0 + lambda * m, -theta) * mean_density(law, m);
  };
  // Below a finite breakpoint b the difference-quotient density (theta < 1)
  // degrades, so the last cell [c, b] is integrated by parts:
  // int k dF_M = k(b) F_M(b) - k(c) F_M(c) - int k' F_M.
  // In an infinite tail the density cancels badly, and [c, inf) uses the
  // survival form k(c) S(c) + int k' S.
  auto dk = [&](double m) {
    return theta * lambda * std::pow(1.0 + lambda * m, -theta - 1.0);
  };
  Integrand by_parts = [&](double m) { return dk(m) * mean_cdf(law, m); };
  Integrand tail = [&](double m) { return -dk(m) * (1.0 - mean_cdf(law, m)); };
  auto k = [&](double m) { return std::pow(1.0 + lambda * m, -theta); };
  QuadResult total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    if (theta >= 1.0) {
      total += integrate(f, a, b, law.quad());
      continue;
    }
    if (!std::isfinite(b)) {
      const double c = a + kTailStart * F.scale_hint;
      total += integrate(f, a, c, law.quad());
      total.value += k(c) * (1.0 - mean_cdf(law, c));
      total += integrate(tail, c, b, law.quad());
      continue;
    }
    const double c = b - kEndCell * (b - a);
    total += integrate(f, a, c, law.quad());
    const double Fb = b >= F.support.upper ? 1.0 : mean_cdf(law, b);
    total.value += k(b) * Fb - k(c) * mean_cdf(law, c);
    total += integrate(by_parts, c, b, law.quad());
  }
  return total;
}

}  // namespace dmeans
