#include "dmeans/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dmeans/errors.hpp"

namespace dmeans {

namespace {

constexpr int kProbeSteps = 1000;  // x_k = 2^k up to 2^1000
constexpr int kProbeWindow = 100;
constexpr double kProbeLimit = 1e-2;

std::vector<double> pieces_for(const DistributionSpec& F,
                               const std::vector<double>& extra) {
  std::vector<double> pts = F.breakpoints();
  for (double e : extra) {
    if (e > F.support.lower && e < F.support.upper) pts.push_back(e);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double continuous_cdf(const DistributionSpec& F, double x) {
  double v = F.cdf(x);
  for (const auto& a : F.atoms) {
    if (a.location <= x) v -= a.mass;
  }
  return v;
}

// Riemann-Stieltjes midpoint sums against the continuous part of the cdf,
// doubling the grid until successive sums agree.
QuadResult stieltjes_piece(const DistributionSpec& F,
                           const std::function<double(const PieceNode&)>& g,
                           double a, double b, const QuadratureConfig& q) {
  if (std::isinf(b)) {
    double x = std::max(1.0, 2.0 * std::abs(a));
    for (int k = 0; k < kProbeSteps && F.sf(x) > q.tail_delta; ++k) x *= 2.0;
    b = x;
  }
  QuadResult res;
  double previous = 0.0;
  for (int level = 4; level <= 18; ++level) {
    const long n = 1L << level;
    const double h = (b - a) / static_cast<double>(n);
    double sum = 0.0;
    double f_lo = continuous_cdf(F, a);
    for (long i = 0; i < n; ++i) {
      const double lo = a + h * static_cast<double>(i);
      const double hi = (i + 1 == n) ? b : lo + h;
      const double f_hi = continuous_cdf(F, hi);
      const double mid = 0.5 * (lo + hi);
      sum += g({mid, mid - a, b - mid, a, b}) * (f_hi - f_lo);
      f_lo = f_hi;
    }
    res.evaluations += n;
    res.value = sum;
    if (level > 4) {
      res.error = std::abs(sum - previous);
      if (res.error <= std::max(q.abs_tol, q.rel_tol * std::abs(sum))) {
        res.converged = true;
        return res;
      }
    }
    previous = sum;
  }
  res.converged = false;
  return res;
}

void require_converged(const QuadResult& r, const char* what) {
  if (!std::isfinite(r.value)) {
    throw NumericalQualityError(std::string(what) + ": non-finite result",
                                r.error);
  }
  if (!r.converged && r.error > 1e-6 * std::max(1.0, std::abs(r.value))) {
    throw NumericalQualityError(
        std::string(what) + ": quadrature did not reach tolerance", r.error);
  }
}

}  // namespace

double sin_pi_pair(double u, double one_minus_u) {
  if (u > 0.5 && u <= 1.0) return std::sin(std::numbers::pi * one_minus_u);
  return std::sin(std::numbers::pi * u);
}

bool existence_check(const DistributionSpec& F, const QuadratureConfig&) {
  if (F.support.bounded()) return true;
  double worst = 0.0;
  double x = 1.0;
  for (int k = 1; k <= kProbeSteps; ++k) {
    x *= 2.0;
    const double probe = std::log1p(x) * F.sf(x);
    if (!std::isfinite(probe)) return false;
    if (k > kProbeSteps - kProbeWindow) worst = std::max(worst, probe);
  }
  return worst < kProbeLimit;
}

QuadResult expect_continuous(const DistributionSpec& F,
                             const std::function<double(const PieceNode&)>& g,
                             const std::vector<double>& extra_breaks,
                             const QuadratureConfig& q) {
  QuadResult total;
  if (!F.has_density() && F.continuous_mass() <= 1e-15) return total;
  const std::vector<double> pts = pieces_for(F, extra_breaks);
  const double lower = F.support.lower;
  const double upper = F.support.upper;
  std::vector<std::pair<double, double>> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    pieces.emplace_back(pts[i], pts[i + 1]);
  }
  if (!F.support.bounded() && !pts.empty()) pieces.emplace_back(pts.back(), kInf);

  for (const auto& [a, b] : pieces) {
    if (!(b > a)) continue;
    if (!F.has_density()) {
      total += stieltjes_piece(F, g, a, b, q);
      continue;
    }
    const bool infinite = std::isinf(b);
    NodeIntegrand f = [&, a, b, infinite](const Node& n) {
      if (!std::isfinite(n.x)) return 0.0;
      const double dl = (a == lower) ? n.from_lower : (a - lower) + n.from_lower;
      const double du = infinite ? kInf
                        : (b == upper) ? n.from_upper
                                       : (upper - b) + n.from_upper;
      const double d = F.density_at(n.x, dl, du);
      if (d == 0.0) return 0.0;
      const double above = infinite ? kInf : n.from_upper;
      return g({n.x, n.from_lower, above, a, b}) * d;
    };
    total += integrate(f, a, b, q);
  }
  return total;
}

double psi(const DistributionSpec& F, double lambda, const QuadratureConfig& q) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("psi: lambda must be finite and >= 0");
  }
  if (lambda == 0.0) return 0.0;
  if (!existence_check(F, q)) {
    throw ExistenceError("psi diverges for '" + F.label +
                         "': M_theta and T_theta exist only when psi is finite");
  }
  double value = 0.0;
  for (const auto& a : F.atoms) value += a.mass * std::log1p(lambda * a.location);
  const QuadResult r = expect_continuous(
      F, [lambda](const PieceNode& n) { return std::log1p(lambda * n.x); }, {},
      q);
  require_converged(r, "psi");
  return value + r.value;
}

double phi(const DistributionSpec& F, double t, const QuadratureConfig& q) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("phi: t must be positive and finite");
  }
  if (!existence_check(F, q)) {
    throw ExistenceError("phi diverges for '" + F.label + "'");
  }
  double value = 0.0;
  for (const auto& a : F.atoms) {
    if (a.location != t) value += a.mass * std::log(std::abs(t - a.location));
  }
  // For t far beyond the bulk of an unbounded law, a ladder of breakpoints
  // keeps the long piece below t from hiding the mass near the bulk.
  std::vector<double> breaks{t};
  if (!F.support.bounded()) {
    const double bulk = std::max({1.0, F.scale_hint, F.support.lower});
    for (double b = 1e3 * bulk; b < t; b *= 1e3) breaks.push_back(b);
  }
  const QuadResult r = expect_continuous(
      F,
      [t](const PieceNode& n) {
        double d;
        if (n.right == t) {
          d = n.above;
        } else if (n.left == t) {
          d = n.below;
        } else {
          d = std::abs(t - n.x);
        }
        return std::log(d);
      },
      breaks, q);
  require_converged(r, "phi");
  return value + r.value;
}

double phi_thinned(const ThinnedSpec& F, double t, const QuadratureConfig& q) {
  if (!(t > 0.0)) throw DomainError("phi_thinned: t must be positive");
  if (F.sigma == 1.0) return phi(*F.base, t, q);
  return F.sigma * phi(*F.base, t, q) + (1.0 - F.sigma) * std::log(t);
}

Functionals::Functionals(DistributionSpec spec, QuadratureConfig q,
                         RealFn phi_closed, RealFn psi_closed)
    : spec_(std::make_shared<const DistributionSpec>(std::move(spec))),
      quad_(q),
      phi_fn_(std::move(phi_closed)),
      psi_fn_(std::move(psi_closed)) {
  quad_.validate();
  auto s = spec_;
  if (!phi_fn_) {
    phi_fn_ = [s, q](double t) { return dmeans::phi(*s, t, q); };
  }
  if (!psi_fn_) {
    psi_fn_ = [s, q](double l) { return dmeans::psi(*s, l, q); };
  }
}

double Functionals::cached(std::unordered_map<double, double>& cache,
                           const RealFn& fn, double arg) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache.find(arg);
    if (it != cache.end()) return it->second;
  }
  const double v = fn(arg);
  std::lock_guard<std::mutex> lock(mutex_);
  cache.emplace(arg, v);
  return v;
}

double Functionals::phi(double t) const { return cached(phi_cache_, phi_fn_, t); }

double Functionals::psi(double lambda) const {
  return cached(psi_cache_, psi_fn_, lambda);
}

FunctionalsPtr make_functionals(const DistributionSpec& spec,
                                const QuadratureConfig& q, RealFn phi_closed,
                                RealFn psi_closed) {
  return std::make_shared<const Functionals>(spec, q, std::move(phi_closed),
                                             std::move(psi_closed));
}

}  // namespace dmeans
