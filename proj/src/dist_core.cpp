#include "dmeans/dist_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dmeans/errors.hpp"
#include "dmeans/montecarlo.hpp"

namespace dmeans {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double arccot(double u) { return std::atan2(1.0, u); }

}  // namespace

double DistributionSpec::atom_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.mass;
  return m;
}

double DistributionSpec::density_at(double x, double from_lower,
                                    double from_upper) const {
  if (!density) return 0.0;
  const double half = 0.5 * (support.upper - support.lower);
  if (density_above_lower && from_lower < half) {
    return density_above_lower(from_lower);
  }
  if (density_below_upper && support.bounded() && from_upper < half) {
    return density_below_upper(from_upper);
  }
  return density(x);
}

std::vector<double> DistributionSpec::breakpoints() const {
  std::vector<double> pts{support.lower, support.upper};
  for (double k : kinks) pts.push_back(k);
  for (const auto& a : atoms) pts.push_back(a.location);
  std::vector<double> out;
  for (double p : pts) {
    if (std::isfinite(p) && p >= support.lower && p <= support.upper) {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double DistributionSpec::sample(Rng& rng) const {
  if (!sampler) {
    throw ContractError("distribution '" + label + "' has no sampler");
  }
  return sampler(rng);
}

DistributionSpec make_uniform01() {
  DistributionSpec d;
  d.label = "uniform01";
  d.cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  d.density = [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; };
  d.density_below_upper = [](double) { return 1.0; };
  d.support = {0.0, 1.0};
  d.scale_hint = 0.5;
  d.sampler = [](Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  };
  return d;
}

DistributionSpec make_point_mass(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw DomainError("point_mass: location must be finite and >= 0, got " +
                      fmt(a));
  }
  DistributionSpec d;
  d.label = "point_mass(" + fmt(a) + ")";
  d.cdf = [a](double x) { return x >= a ? 1.0 : 0.0; };
  d.atoms = {{a, 1.0}};
  d.support = {a, a};
  d.scale_hint = a > 0.0 ? a : 1.0;
  d.sampler = [a](Rng&) { return a; };
  return d;
}

DistributionSpec make_exp_ratio() {
  DistributionSpec d;
  d.label = "exp_ratio";
  d.cdf = [](double w) { return w <= 0.0 ? 0.0 : w / (1.0 + w); };
  d.survival = [](double w) { return w <= 0.0 ? 1.0 : 1.0 / (1.0 + w); };
  d.density = [](double w) {
    return w < 0.0 ? 0.0 : 1.0 / ((1.0 + w) * (1.0 + w));
  };
  d.support = {0.0, kInf};
  d.sampler = [](Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    return e(rng) / e(rng);
  };
  return d;
}

double lamperti_density(double alpha, double z) {
  if (z < 0.0) return 0.0;
  const double s = std::sin(kPi * alpha);
  const double c = std::cos(kPi * alpha);
  if (z > 1e150) return s / (kPi * alpha) / (z * (z + 2.0 * c));
  return s / (kPi * alpha) / (z * z + 2.0 * z * c + 1.0);
}

double lamperti_cdf(double alpha, double z) {
  if (z <= 0.0) return 0.0;
  if (std::isinf(z)) return 1.0;
  const double s = std::sin(kPi * alpha);
  const double c = std::cos(kPi * alpha);
  if (z <= 1.0) return arccot((c + 1.0 / z) / s) / (kPi * alpha);
  return 1.0 - arccot((c + z) / s) / (kPi * alpha);
}

DistributionSpec make_lamperti(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("lamperti: alpha must lie in (0,1), got " + fmt(alpha));
  }
  DistributionSpec d;
  d.label = "lamperti(" + fmt(alpha) + ")";
  d.cdf = [alpha](double z) { return lamperti_cdf(alpha, z); };
  d.survival = [alpha](double z) {
    return z <= 0.0 ? 1.0 : lamperti_cdf(alpha, 1.0 / z);
  };
  d.density = [alpha](double z) { return lamperti_density(alpha, z); };
  d.support = {0.0, kInf};
  d.sampler = [alpha](Rng& rng) { return sample_lamperti(alpha, rng); };
  return d;
}

ThinnedSpec thin(const DistributionSpec& base, double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("thin: sigma must lie in (0,1], got " + fmt(sigma));
  }
  ThinnedSpec t;
  t.base = std::make_shared<const DistributionSpec>(base);
  t.sigma = sigma;
  if (sigma == 1.0) {
    static_cast<DistributionSpec&>(t) = base;
    return t;
  }
  auto b = t.base;
  t.label = "thinned(" + base.label + "," + fmt(sigma) + ")";
  t.cdf = [b, sigma](double x) {
    if (x < 0.0) return 0.0;
    return sigma * b->cdf(x) + (1.0 - sigma);
  };
  if (base.density) {
    t.density = [b, sigma](double x) { return sigma * b->density(x); };
  }
  t.survival = [b, sigma](double x) { return x < 0.0 ? 1.0 : sigma * b->sf(x); };
  if (base.density_below_upper) {
    t.density_below_upper = [b, sigma](double v) {
      return sigma * b->density_below_upper(v);
    };
  }
  bool merged = false;
  for (const auto& a : base.atoms) {
    Atom scaled{a.location, sigma * a.mass};
    if (a.location == 0.0) {
      scaled.mass += 1.0 - sigma;
      merged = true;
    }
    t.atoms.push_back(scaled);
  }
  if (!merged) t.atoms.insert(t.atoms.begin(), Atom{0.0, 1.0 - sigma});
  t.support = {0.0, base.support.upper};
  t.kinks = base.kinks;
  if (base.support.lower > 0.0) t.kinks.push_back(base.support.lower);
  t.scale_hint = base.scale_hint;
  if (base.sampler) {
    t.sampler = [b, sigma](Rng& rng) {
      const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double x = b->sampler(rng);
      return u < sigma ? x : 0.0;
    };
  }
  return t;
}

TiltBaseSpec tilt_base(const DistributionSpec& base, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("tilt_base: c must be positive and finite, got " +
                      fmt(c));
  }
  TiltBaseSpec t;
  t.base = std::make_shared<const DistributionSpec>(base);
  t.c = c;
  auto b = t.base;
  auto fwd = [c](double x) {
    return std::isinf(x) ? 1.0 : c * x / (c * x + 1.0);
  };
  t.label = "tilt_base(" + base.label + "," + fmt(c) + ")";
  t.cdf = [b, c](double y) {
    if (y < 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    return b->cdf(y / (c * (1.0 - y)));
  };
  t.survival = [b, c](double y) {
    if (y < 0.0) return 1.0;
    if (y >= 1.0) return 0.0;
    return b->sf(y / (c * (1.0 - y)));
  };
  if (base.density) {
    t.density = [b, c](double y) {
      if (y < 0.0 || y >= 1.0) return 0.0;
      const double v = 1.0 - y;
      return b->density(y / (c * v)) / (c * v * v);
    };
    if (!base.support.bounded()) {
      t.density_below_upper = [b, c](double v) {
        return b->density((1.0 - v) / (c * v)) / (c * v * v);
      };
    }
  }
  for (const auto& a : base.atoms) t.atoms.push_back({fwd(a.location), a.mass});
  t.support = {fwd(base.support.lower), fwd(base.support.upper)};
  for (double k : base.kinks) t.kinks.push_back(fwd(k));
  t.scale_hint = fwd(base.scale_hint);
  if (base.sampler) {
    t.sampler = [b, c](Rng& rng) {
      const double x = b->sampler(rng);
      return c * x / (c * x + 1.0);
    };
  }
  return t;
}

DistributionSpec pushforward_monotone(const DistributionSpec& base,
                                      const MonotoneMap& m) {
  if (!m.map || !m.inverse) {
    throw ContractError("pushforward_monotone: map and inverse are required");
  }
  const double lo = base.support.lower;
  const double hi = base.support.upper;

  // Probe grid: uniform on bounded supports, geometric beyond the lower end
  // on infinite ones.
  constexpr int kProbe = 1000;
  double prev = m.map(lo);
  for (int i = 1; i < kProbe; ++i) {
    double x;
    if (std::isfinite(hi)) {
      x = lo + (hi - lo) * i / (kProbe - 1);
    } else {
      x = lo + std::pow(10.0, -8.0 + 16.0 * i / (kProbe - 1));
    }
    const double y = m.map(x);
    if (!(y > prev)) {
      throw ContractError("pushforward_monotone: map is not strictly "
                          "increasing near x = " + fmt(x));
    }
    prev = y;
  }

  auto b = std::make_shared<const DistributionSpec>(base);
  DistributionSpec d;
  d.label = m.label.empty() ? "pushforward(" + base.label + ")" : m.label;
  if (m.image) {
    d.support = *m.image;
  } else {
    d.support.lower = m.map(lo);
    d.support.upper = std::isfinite(hi) ? m.map(hi) : kInf;
  }
  const Support image = d.support;
  RealFn inv = m.inverse;
  d.cdf = [b, inv, image](double y) {
    if (y < image.lower) return 0.0;
    if (y >= image.upper) return 1.0;
    return b->cdf(inv(y));
  };
  d.survival = [b, inv, image](double y) {
    if (y < image.lower) return 1.0;
    if (y >= image.upper) return 0.0;
    return b->sf(inv(y));
  };
  if (base.density && m.inverse_derivative) {
    RealFn dinv = m.inverse_derivative;
    d.density = [b, inv, dinv, image](double y) {
      if (y < image.lower || y > image.upper) return 0.0;
      return b->density(inv(y)) * dinv(y);
    };
    d.density_below_upper = m.density_below_upper;
    d.density_above_lower = m.density_above_lower;
  }
  for (const auto& a : base.atoms) d.atoms.push_back({m.map(a.location), a.mass});
  for (double k : base.kinks) d.kinks.push_back(m.map(k));
  d.scale_hint = m.map(base.scale_hint);
  if (!(d.scale_hint > 0.0) || !std::isfinite(d.scale_hint)) d.scale_hint = 1.0;
  if (base.sampler) {
    RealFn fwd = m.map;
    d.sampler = [b, fwd](Rng& rng) { return fwd(b->sampler(rng)); };
  }
  return d;
}

}  // namespace dmeans
