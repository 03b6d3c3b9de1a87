#include "dmeans/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "dmeans/catalog.hpp"
#include "dmeans/descriptor.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/functionals.hpp"
#include "dmeans/mean_laws.hpp"
#include "dmeans/montecarlo.hpp"
#include "dmeans/subordinators.hpp"
#include "dmeans/transforms.hpp"

namespace dmeans {

namespace {

using nlohmann::json;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return out;
}

Check make_check(std::string name, double stat, double tol, json detail = {}) {
  // NaN never passes.
  return {std::move(name), stat, tol, stat <= tol, std::move(detail)};
}

// Runs `make`; an exception becomes a failed check carrying the message.
Check guarded(const std::string& name, const std::function<Check()>& make) {
  try {
    return make();
  } catch (const std::exception& e) {
    return {name, std::numeric_limits<double>::quiet_NaN(), 0.0, false,
            {{"error", e.what()}}};
  }
}

// Largest |f(x) - g(x)| / max(1, |g(x)|) over xs.
Check compare_on(std::string name, const std::vector<double>& xs,
                 const RealFn& f, const RealFn& g, double tol) {
  double worst = 0.0;
  double at = xs.empty() ? 0.0 : xs.front();
  for (double x : xs) {
    const double ref = g(x);
    const double err = std::abs(f(x) - ref) / std::max(1.0, std::abs(ref));
    if (!(err <= worst)) {
      worst = err;
      at = x;
    }
  }
  return make_check(std::move(name), worst, tol, {{"at", at}, {"points", xs.size()}});
}

Check normalisation(std::string name, const RealFn& density, Support s,
                    const QuadratureConfig& q, double tol) {
  const QuadResult r = integrate(density, s.lower, s.upper, q);
  return make_check(std::move(name), std::abs(r.value - 1.0), tol,
                    {{"integral", r.value}, {"quad_error", r.error}});
}

// ---------------------------------------------------------------------------

SuiteReport cauchy_stieltjes_suite(const SuiteOptions& o) {
  SuiteReport rep{"cauchy-stieltjes", {}};
  std::vector<std::string> dists = {R"("uniform01")", R"("exp_ratio")",
                                    R"({"kind":"lamperti","params":{"alpha":0.5}})"};
  if (o.dist) dists = {*o.dist};
  std::vector<double> thetas = {0.5, 1.0, 2.0};
  if (o.theta) thetas = {*o.theta};
  for (const auto& d : dists) {
    const BuiltDistribution b = parse_distribution(d);
    const FunctionalsPtr F = b.functionals(o.quad);
    for (double theta : thetas) {
      const MeanLaw law(theta, F);
      for (double lambda : {0.5, 1.0, 2.0}) {
        const QuadResult lhs = cauchy_stieltjes(law, lambda);
        const double rhs = std::exp(-theta * F->psi(lambda));
        const double abs_err = std::abs(lhs.value - rhs);
        rep.checks.push_back(make_check(
            F->spec().label + " theta=" + json(theta).dump() +
                " lambda=" + json(lambda).dump(),
            abs_err / std::abs(rhs), 1e-5,
            {{"lhs", lhs.value}, {"rhs", rhs}, {"abs_error", abs_err}}));
      }
    }
  }
  return rep;
}

SuiteReport beta_scale_suite(const SuiteOptions& o) {
  SuiteReport rep{"beta-scale", {}};
  const BuiltDistribution u = parse_distribution("uniform01");
  const FunctionalsPtr F = u.functionals(o.quad);
  const auto xs = linspace(0.005, 0.995, 199);
  for (double sigma : {0.25, 0.5, 0.75}) {
    const std::string tag = "sigma=" + json(sigma).dump();
    rep.checks.push_back(compare_on(
        "pointwise " + tag, xs,
        [&](double x) { return scaled_mean_density(*F, sigma, x); },
        [&](double x) { return dk_component_density(sigma, x); }, 1e-8));
    rep.checks.push_back(normalisation(
        "mass " + tag, [&](double x) { return scaled_mean_density(*F, sigma, x); },
        {0.0, 1.0}, o.quad, 1e-7));
  }
  return rep;
}

SuiteReport mc_ks_suite(const SuiteOptions& o) {
  SuiteReport rep{"mc-ks", {}};
  SamplerConfig cfg;
  cfg.seed = o.seed;
  cfg.sample_count = o.samples;
  cfg.validate();
  const long n = cfg.sample_count;
  const double crit = ks_critical(n);

  auto draw_n = [&](std::uint64_t stream, const std::function<double(Rng&)>& f) {
    Rng rng = make_stream(cfg.seed, stream);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(f(rng));
    return out;
  };
  auto add = [&](std::string name, const std::vector<double>& xs, const RealFn& cdf) {
    rep.checks.push_back(make_check(std::move(name), ks_statistic(xs, cdf), crit,
                                    {{"n", n}}));
  };

  const DistributionSpec uniform = make_uniform01();
  add("M_1(F_U) vs closed density",
      draw_n(1, [&](Rng& r) { return sample_dirichlet_mean(uniform, 1.0, cfg, r); }),
      tabulate_cdf(dk_mean_density, 0.0, 1.0, 2000, 1.0, o.quad));

  const FunctionalsPtr FU = parse_distribution("uniform01").functionals(o.quad);
  add("beta_{0.5,0.5} M_0.5(F_U) vs scaled density",
      draw_n(2,
             [&](Rng& r) {
               const double g1 = std::gamma_distribution<double>(0.5)(r);
               const double g2 = std::gamma_distribution<double>(0.5)(r);
               return g1 / (g1 + g2) * sample_dirichlet_mean(uniform, 0.5, cfg, r);
             }),
      tabulate_cdf([&](double x) { return scaled_mean_density(*FU, 0.5, x); }, 0.0,
                   1.0, 2000, 1.0, o.quad));

  add("Z_0.5 vs Lamperti cdf",
      draw_n(3, [](Rng& r) { return sample_lamperti(0.5, r); }),
      [](double z) { return z <= 0.0 ? 0.0 : lamperti_cdf(0.5, z); });

  const DistributionSpec inv_g = make_inv_G(0.5);
  add("GGC(0.5, F_{1/G_0.5}) vs Sigma_0.5 density",
      draw_n(4, [&](Rng& r) { return sample_ggc(inv_g, 0.5, cfg, r); }),
      tabulate_cdf([](double x) { return sigma_alpha_density(0.5, x); }, 0.0, kInf,
                   2000, 1.0, o.quad));
  return rep;
}

SuiteReport tilt_roundtrip_suite(const SuiteOptions& o) {
  SuiteReport rep{"tilt-roundtrip", {}};
  const FunctionalsPtr FU = parse_distribution("uniform01").functionals(o.quad);
  const MeanLaw law(1.0, FU);
  const RealFn xi = [&](double x) { return mean_density_theta1(law, x); };
  const RealFn forward = [&](double y) {
    return tilt_forward_density(*FU, 1.0, 1.0, xi, y);
  };
  const auto xs = linspace(0.05, 0.95, 91);
  rep.checks.push_back(compare_on(
      "uniform: inverse(forward(xi)) = xi", xs,
      [&](double x) { return tilt_inverse_density(*FU, 1.0, forward, x); }, xi,
      1e-9));

  const FunctionalsPtr FW = parse_distribution("exp_ratio").functionals(o.quad);
  rep.checks.push_back(compare_on(
      "W mean tilted with c=1 = uniform mean", xs,
      [&](double y) { return tilt_forward_density(*FW, 1.0, 1.0, w_mean_density, y); },
      dk_mean_density, 1e-9));
  return rep;
}

SuiteReport phi_crosscheck_suite(const SuiteOptions& o) {
  SuiteReport rep{"phi-crosscheck", {}};
  const double alpha = 0.5;
  const auto ys = linspace(0.02, 0.98, 50);
  const BuiltDistribution u = parse_distribution("uniform01");
  const FunctionalsPtr FU = u.functionals(o.quad);
  const DistributionSpec w = make_exp_ratio();
  for (double c : {0.5, 1.0, 2.0}) {
    const std::string tag = "c=" + json(c).dump();
    const DistributionSpec tu = tilt_base(*u.spec, c);
    rep.checks.push_back(compare_on(
        "tilted uniform " + tag, ys, [&](double y) { return phi_tilt(*FU, c, y); },
        [&](double y) { return phi(tu, y, o.quad); }, 1e-6));
    const DistributionSpec tw = tilt_base(w, c);
    rep.checks.push_back(compare_on(
        "tilted W " + tag, ys, [&](double y) { return phi_tilt_exp_ratio(c, y); },
        [&](double y) { return phi(tw, y, o.quad); }, 1e-6));
  }
  std::vector<double> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(0.05 * std::pow(400.0, i / 49.0));
  const DistributionSpec ig = make_inv_G(alpha);
  rep.checks.push_back(compare_on(
      "1/G_0.5", xs, [&](double x) { return phi_inv_G(alpha, x); },
      [&](double x) { return phi(ig, x, o.quad); }, 1e-6));
  const DistributionSpec zp = make_z_pow(alpha);
  rep.checks.push_back(compare_on(
      "Z_0.5^2", xs, [&](double z) { return phi_z_pow(alpha, z); },
      [&](double z) { return phi(zp, z, o.quad); }, 1e-6));
  const DistributionSpec u0 = make_u_alpha0(alpha);
  rep.checks.push_back(compare_on(
      "U_{0.5,0}", ys, [&](double t) { return phi_u_alpha0(alpha, t); },
      [&](double t) { return phi(u0, t, o.quad); }, 1e-6));
  return rep;
}

SuiteReport fidi_suite(const SuiteOptions& o) {
  SuiteReport rep{"fidi-convolution", {}};
  const FunctionalsPtr FU = parse_distribution("uniform01").functionals(o.quad);
  for (double sigma : {0.25, 0.5, 1.0}) {
    rep.checks.push_back(normalisation(
        "g_sigma mass sigma=" + json(sigma).dump(),
        [&](double x) { return ggc_component_density(*FU, sigma, x); },
        {0.0, kInf}, o.quad, 1e-6));
  }
  const ConvolutionReport c = convolution_check(*FU, 0.5, 0.5, 200, 10.0);
  rep.checks.push_back(make_check("g_0.5 * g_0.5 = g_1 (sup norm)",
                                  c.max_abs_residual, 1e-4,
                                  {{"at", c.at_x}, {"points", c.grid.size()}}));
  return rep;
}

SuiteReport catalog_suite(const SuiteOptions& o) {
  SuiteReport rep{"catalog-normalization", {}};
  const double alpha = 0.5, sigma = 0.5, c = 1.0;
  const CatalogParams params{{"alpha", alpha}, {"sigma", sigma}, {"c", c}};
  const QuadratureConfig& q = o.quad;

  std::map<std::string, FunctionalsPtr> bases;
  auto base = [&](const std::string& key) {
    auto it = bases.find(key);
    if (it != bases.end()) return it->second;
    DistributionSpec s;
    if (key == "uniform") s = make_uniform01();
    else if (key == "W") s = make_exp_ratio();
    else if (key == "U0") s = make_u_alpha0(alpha);
    else if (key == "zroot") s = make_z_root(alpha);
    else if (key == "invG") s = make_inv_G(alpha);
    else if (key == "zpow") s = make_z_pow(alpha);
    else s = make_bertoin_G(alpha);
    return bases[key] = make_functionals(s, q);
  };
  auto scaled = [&](const std::string& key, double s) {
    return RealFn([F = base(key), s](double x) { return scaled_mean_density(*F, s, x); });
  };

  std::map<std::string, RealFn> generic = {
      {"upsilon_component", scaled("U0", sigma)},
      {"upsilon_alpha_component", scaled("U0", alpha)},
      {"upsilon_ddag_component", scaled("zroot", sigma)},
      {"upsilon_ddag_alpha", scaled("zroot", alpha)},
      {"upsilon_ddag_2alpha", scaled("zroot", 2.0 * alpha)},
      {"dk_mean", scaled("uniform", 1.0)},
      {"w_mean", scaled("W", 1.0)},
      {"dk_component", scaled("uniform", sigma)},
      {"w_component", scaled("W", sigma)},
      {"B_alpha", scaled("invG", 1.0 - alpha)},
      {"bertoin_component", scaled("invG", sigma)},
      {"bertoin_tilted_component",
       [F = base("invG"), sigma, c](double y) {
         return scaled_tilted_density(*F, sigma, c, y);
       }},
      {"z_subordinator_component", scaled("zpow", sigma)},
      {"z_dagger_component", scaled("G", sigma)},
      {"sigma_alpha",
       [F = base("invG"), alpha](double x) {
         return ggc_component_density(*F, 1.0 - alpha, x);
       }},
      {"sigma_dagger",
       [ggc = GgcLaw(1.0 - alpha, base("invG")), c](double x) {
         return c * tilted_ggc_density(ggc, c, c * x);
       }},
  };

  const auto unit_grid = linspace(0.05, 0.95, 10);
  const std::vector<double> half_grid = {0.05, 0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 4.0, 8.0, 20.0};
  for (const CatalogEntry& e : catalog()) {
    CatalogParams given;
    for (const auto& p : e.params) given[p] = params.at(p);
    const CatalogParams p = catalog_params(e, given);
    const Support s = e.support(p);
    const RealFn f = [&e, p](double x) { return e.density(p, x); };
    rep.checks.push_back(guarded(e.name + " mass", [&] {
      if (!e.spec) return normalisation(e.name + " mass", f, s, q, 1e-7);
      // Base laws carry endpoint hooks that keep 1 - u exact near the ends.
      const DistributionSpec spec = e.spec(p);
      const NodeIntegrand g = [&spec](const Node& n) {
        return spec.density_at(n.x, n.from_lower, n.from_upper);
      };
      const QuadResult r = integrate(g, s.lower, s.upper, q);
      return make_check(e.name + " mass", std::abs(r.value - 1.0), 1e-7,
                        {{"integral", r.value}, {"quad_error", r.error}});
    }));
    auto it = generic.find(e.name);
    if (it == generic.end()) continue;
    std::vector<double> xs;
    if (s.bounded()) {
      xs = unit_grid;
    } else {
      for (double x : half_grid) xs.push_back(s.lower + x);
    }
    rep.checks.push_back(guarded(e.name + " vs generic", [&] {
      return compare_on(e.name + " vs generic", xs, f, it->second, 1e-6);
    }));
  }
  return rep;
}

SuiteReport upsilon_laplace_suite(const SuiteOptions& o) {
  SuiteReport rep{"upsilon-laplace", {}};
  const double alpha = 0.5;
  const FunctionalsPtr F = make_functionals(make_u_alpha0(alpha), o.quad);
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double generic = std::exp(-alpha * F->psi(lambda));
    const double closed = upsilon_laplace(alpha, lambda);
    rep.checks.push_back(make_check("lambda=" + json(lambda).dump(),
                                    std::abs(generic - closed), 1e-8,
                                    {{"generic", generic}, {"closed", closed}}));
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"cauchy-stieltjes", cauchy_stieltjes_suite},
      {"beta-scale", beta_scale_suite},
      {"mc-ks", mc_ks_suite},
      {"tilt-roundtrip", tilt_roundtrip_suite},
      {"phi-crosscheck", phi_crosscheck_suite},
      {"fidi-convolution", fidi_suite},
      {"catalog-normalization", catalog_suite},
      {"upsilon-laplace", upsilon_laplace_suite},
  };
  return r;
}

}  // namespace

bool SuiteReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double SuiteReport::worst_ratio() const {
  double w = 0.0;
  for (const auto& c : checks) {
    const double r = c.statistic / c.tolerance;
    if (!(r <= w)) w = r;
  }
  return w;
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["worst_ratio"] = worst_ratio();
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json cj = {{"name", c.name},
               {"statistic", c.statistic},
               {"tolerance", c.tolerance},
               {"pass", c.pass}};
    if (!c.detail.is_null()) cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  opts.quad.validate();
  for (const auto& [n, f] : registry()) {
    if (n == name) return f(opts);
  }
  throw DomainError("unknown verify suite '" + name + "'");
}

}  // namespace dmeans
