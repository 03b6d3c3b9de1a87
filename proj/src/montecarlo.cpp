#include "dmeans/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dmeans/errors.hpp"

namespace dmeans {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPdSticks = 32;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double open_uniform(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double v;
  do {
    v = u(rng);
  } while (v <= 0.0);
  return v;
}

double gamma_draw(double shape, Rng& rng) {
  return std::gamma_distribution<double>(shape, 1.0)(rng);
}

double beta_draw(double a, double b, Rng& rng) {
  const double x = gamma_draw(a, rng);
  const double y = gamma_draw(b, rng);
  return x / (x + y);
}

// log of Kanter's A(u) for u in (0, pi).
double log_kanter(double alpha, double u) {
  return (std::log(std::sin(alpha * u)) - std::log(std::sin(u))) / (1.0 - alpha) +
         std::log(std::sin((1.0 - alpha) * u)) - std::log(std::sin(alpha * u));
}

void check_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(where) + ": alpha must lie in (0,1)");
  }
}

bool point_mass_only(const DistributionSpec& F) {
  return !F.has_density() && F.atoms.size() == 1 && F.atoms[0].mass == 1.0;
}

// Stick-breaking with Beta(1, theta) sticks over an arbitrary base draw.
double stick_breaking(const std::function<double(Rng&)>& draw, double theta,
                      double epsilon, Rng& rng) {
  double rest = 1.0;
  double sum = 0.0;
  while (true) {
    const double keep = std::exp(std::log(open_uniform(rng)) / theta);
    sum += rest * (1.0 - keep) * draw(rng);
    rest *= keep;
    if (rest < epsilon) {
      return sum + rest * draw(rng);
    }
  }
}

}  // namespace

void SamplerConfig::validate() const {
  if (!(truncation_epsilon > 0.0 && truncation_epsilon < 1.0)) {
    throw DomainError("SamplerConfig: truncation_epsilon must lie in (0,1)");
  }
  if (sample_count < 1) throw DomainError("SamplerConfig: sample_count < 1");
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ULL);
  std::vector<std::uint32_t> words;
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t w = splitmix64(state);
    words.push_back(static_cast<std::uint32_t>(w));
    words.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

double sample_positive_stable(double alpha, Rng& rng) {
  check_alpha(alpha, "sample_positive_stable");
  const double u = kPi * open_uniform(rng);
  const double e = -std::log(open_uniform(rng));
  return std::exp((1.0 - alpha) / alpha * (log_kanter(alpha, u) - std::log(e)));
}

double sample_lamperti(double alpha, Rng& rng) {
  check_alpha(alpha, "sample_lamperti");
  const double u1 = kPi * open_uniform(rng);
  const double e1 = -std::log(open_uniform(rng));
  const double u2 = kPi * open_uniform(rng);
  const double e2 = -std::log(open_uniform(rng));
  const double log_z = (1.0 - alpha) * (log_kanter(alpha, u1) - std::log(e1) -
                                        log_kanter(alpha, u2) + std::log(e2));
  return std::exp(log_z);
}

double sample_u_alpha0(double alpha, Rng& rng) {
  const double z = sample_lamperti(alpha, rng);
  const double r = std::pow(z, 1.0 / (alpha + 1.0));
  return std::isinf(r) ? 1.0 : r / (1.0 + r);
}

double sample_dirichlet_mean(const DistributionSpec& base, double theta,
                             const SamplerConfig& cfg, Rng& rng) {
  cfg.validate();
  if (!(theta > 0.0)) throw DomainError("sample_dirichlet_mean: theta <= 0");
  if (point_mass_only(base)) return base.atoms[0].location;
  if (!base.has_sampler()) {
    throw ContractError("sample_dirichlet_mean: '" + base.label +
                        "' has no sampler");
  }
  return stick_breaking([&base](Rng& r) { return base.sampler(r); }, theta,
                        cfg.truncation_epsilon, rng);
}

double sample_pd_mean(double alpha, double theta, const SamplerConfig& cfg,
                      Rng& rng) {
  cfg.validate();
  check_alpha(alpha, "sample_pd_mean");
  if (!(theta > -alpha)) throw DomainError("sample_pd_mean: theta <= -alpha");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double rest = 1.0;
  double sum = 0.0;
  int k = 1;
  for (; k <= kMaxPdSticks; ++k) {
    const double v = beta_draw(1.0 - alpha, theta + k * alpha, rng);
    sum += rest * v * unif(rng);
    rest *= 1.0 - v;
    if (rest < cfg.truncation_epsilon) return sum + rest * unif(rng);
  }
  const double theta_rest = theta + (k - 1) * alpha;
  const double tail = stick_breaking(
      [alpha](Rng& r) { return sample_u_alpha0(alpha, r); }, theta_rest,
      cfg.truncation_epsilon, rng);
  return sum + rest * tail;
}

double sample_ggc(const DistributionSpec& base, double theta,
                  const SamplerConfig& cfg, Rng& rng) {
  const double m = sample_dirichlet_mean(base, theta, cfg, rng);
  return gamma_draw(theta, rng) * m;
}

std::vector<double> sample_fidi(const DistributionSpec& base,
                                const PartitionSpec& part,
                                const SamplerConfig& cfg, Rng& rng) {
  part.validate();
  std::vector<double> out;
  for (double s : part.sigmas()) out.push_back(sample_ggc(base, s, cfg, rng));
  return out;
}

std::vector<double> sample_many(const std::function<double(Rng&)>& draw,
                                const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng = make_stream(cfg.seed, 0);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.sample_count));
  for (long i = 0; i < cfg.sample_count; ++i) out.push_back(draw(rng));
  return out;
}

double ks_statistic(const std::vector<double>& samples, const RealFn& cdf) {
  if (samples.empty()) throw ContractError("ks_statistic: no samples");
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ContractError("ks_two_sample: no samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

double ks_critical(long n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

double ks_critical_two_sample(long n, long m) {
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return 1.63 * std::sqrt((dn + dm) / (dn * dm));
}

LaplaceEstimate empirical_laplace(const std::vector<double>& samples,
                                  double lambda) {
  if (samples.empty()) throw ContractError("empirical_laplace: no samples");
  double sum = 0.0;
  double sum2 = 0.0;
  for (double x : samples) {
    const double v = std::exp(-lambda * x);
    sum += v;
    sum2 += v * v;
  }
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  const double var = std::max(0.0, sum2 / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

RealFn tabulate_cdf(const RealFn& density, double lower, double upper,
                    int cells, double scale, const QuadratureConfig& q) {
  if (cells < 2) throw DomainError("tabulate_cdf: need at least 2 cells");
  const bool infinite = std::isinf(upper);
  auto to_x = [=](double u) {
    if (infinite) return u >= 1.0 ? kInf : lower + scale * u / (1.0 - u);
    return lower + (upper - lower) * u;
  };
  auto to_u = [=](double x) {
    if (x <= lower) return 0.0;
    if (infinite) return (x - lower) / (x - lower + scale);
    return std::min(1.0, (x - lower) / (upper - lower));
  };
  auto table = std::make_shared<std::vector<double>>(cells + 1, 0.0);
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double a = to_x(static_cast<double>(i) / cells);
    const double b = to_x(static_cast<double>(i + 1) / cells);
    // End cells may hold integrable singularities.
    if (i == 0 || i + 1 == cells) {
      acc += integrate(density, a, b, q).value;
    } else {
      acc += gauss_kronrod15(density, a, b).value;
    }
    (*table)[i + 1] = acc;
  }
  // Inside the end cells the cdf is integrated exactly instead of
  // interpolated, since those cells may hold a singular endpoint.
  const double first = to_x(1.0 / cells);
  const double last = to_x(static_cast<double>(cells - 1) / cells);
  return [table, to_u, cells, density, lower, upper, first, last,
          q](double x) {
    if (x <= lower) return 0.0;
    if (x < first) return integrate(density, lower, x, q).value;
    if (x >= upper) return table->back();
    if (x > last) {
      return table->back() - integrate(density, x, upper, q).value;
    }
    const double u = to_u(x) * cells;
    const int i = std::min(static_cast<int>(u), cells - 1);
    const double frac = u - i;
    return (*table)[i] + frac * ((*table)[i + 1] - (*table)[i]);
  };
}

}  // namespace dmeans
