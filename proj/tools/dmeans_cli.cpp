// Command-line front end: grid evaluation, transforms, sampling and the
// verification suites. Output is CSV (17 significant digits) or JSON.

#include <charconv>
#include <cmath>
#include <cstring>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dmeans/catalog.hpp"
#include "dmeans/descriptor.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/mean_laws.hpp"
#include "dmeans/montecarlo.hpp"
#include "dmeans/subordinators.hpp"
#include "dmeans/transforms.hpp"
#include "dmeans/verify.hpp"

using namespace dmeans;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitQuality = 3;
constexpr int kExitUsage = 64;

std::string num(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* b = item.data();
    const char* e = b + item.size();
    while (b < e && *b == ' ') ++b;
    auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e) {
      throw DomainError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw DomainError(std::string(what) + " is empty");
  return out;
}

// "start,stop,count" or, with `explicit_list`, any list of abscissae.
std::vector<double> parse_grid(const std::string& grid, const std::string& at) {
  if (!at.empty()) return parse_list(at, "--at");
  if (grid.empty()) throw DomainError("one of --grid or --at is required");
  const auto g = parse_list(grid, "--grid");
  if (g.size() != 3) throw DomainError("--grid expects start,stop,count");
  const double count = g[2];
  if (!(count >= 1.0) || count != std::floor(count)) {
    throw DomainError("--grid count must be a positive integer");
  }
  const int n = static_cast<int>(count);
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    xs.push_back(n == 1 ? g[0] : g[0] + (g[1] - g[0]) * i / (n - 1));
  }
  return xs;
}

struct Output {
  std::string path;
  std::string format = "csv";

  void table(const std::vector<std::string>& header,
             const std::vector<std::vector<double>>& rows) const {
    std::ostringstream os;
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o;
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
        arr.push_back(o);
      }
      os << arr.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << num(r[i]);
        os << "\n";
      }
    }
    write(os.str());
  }

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    f << text;
  }
};

void error_json(const std::string& kind, const std::string& message,
                const json& extra = {}) {
  json j = {{"error", kind}, {"message", message}};
  if (!extra.is_null()) j.update(extra);
  std::cerr << j.dump() << "\n";
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("DMEANS_SEED")) {
    std::uint64_t v = 0;
    const char* e = s + std::strlen(s);
    auto r = std::from_chars(s, e, v);
    if (r.ec == std::errc() && r.ptr == e) return v;
    throw DomainError("DMEANS_SEED is not an unsigned integer");
  }
  return SamplerConfig{}.seed;
}

CatalogParams parse_params(const std::string& text) {
  CatalogParams p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--params expects name=value pairs");
    p[item.substr(0, eq)] = parse_list(item.substr(eq + 1), "--params").at(0);
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet means, GGC laws and their transforms"};
  app.require_subcommand(1);

  QuadratureConfig quad;
  Output out;
  app.add_option("--rel-tol", quad.rel_tol, "relative quadrature tolerance");
  app.add_option("--abs-tol", quad.abs_tol, "absolute quadrature tolerance");
  app.add_option("--max-subdivisions", quad.max_subdivisions, "adaptive segment cap");
  app.add_option("--tail-delta", quad.tail_delta, "negligible tail mass");
  app.add_option("-o,--out", out.path, "output file (default stdout)");
  app.add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string dist = "uniform01";
  std::string grid, at, lambdas;
  double theta = 1.0, sigma = 1.0, c = 1.0;

  auto* psi_cmd = app.add_subcommand("psi", "Levy exponent E log(1 + lambda X)");
  psi_cmd->add_option("--dist", dist, "distribution descriptor (JSON)");
  psi_cmd->add_option("--lambda", lambdas, "comma-separated lambdas")->required();

  auto* phi_cmd = app.add_subcommand("phi", "log-distance functional E log|t - X|");
  for (auto* s : {phi_cmd}) {
    s->add_option("--dist", dist, "distribution descriptor (JSON)");
    s->add_option("--grid", grid, "start,stop,count");
    s->add_option("--at", at, "explicit abscissae");
  }

  auto* density_cmd = app.add_subcommand("density", "density of M_theta(F)");
  auto* cdf_cmd = app.add_subcommand("cdf", "cdf of M_theta(F)");
  for (auto* s : {density_cmd, cdf_cmd}) {
    s->add_option("--dist", dist, "distribution descriptor (JSON)");
    s->add_option("--theta", theta, "theta > 0");
    s->add_option("--grid", grid, "start,stop,count");
    s->add_option("--at", at, "explicit abscissae");
  }

  std::string op;
  auto* transform_cmd = app.add_subcommand("transform", "beta scaling and tilting");
  transform_cmd->add_option("--op", op, "beta-scale|tilt-forward|tilt-inverse|tilted-ggc")
      ->required()
      ->check(CLI::IsMember({"beta-scale", "tilt-forward", "tilt-inverse", "tilted-ggc"}));
  transform_cmd->add_option("--dist", dist, "distribution descriptor (JSON)");
  transform_cmd->add_option("--theta", theta, "theta > 0");
  transform_cmd->add_option("--sigma", sigma, "sigma in (0,1]");
  transform_cmd->add_option("--c", c, "tilting constant c > 0");
  transform_cmd->add_option("--grid", grid, "start,stop,count");
  transform_cmd->add_option("--at", at, "explicit abscissae");

  std::string cells;
  auto* fidi_cmd = app.add_subcommand("fidi", "joint density of subordinator increments");
  fidi_cmd->add_option("--dist", dist, "distribution descriptor (JSON)");
  fidi_cmd->add_option("--theta", theta, "theta > 0");
  fidi_cmd->add_option("--cells", cells, "cell lengths summing to 1/theta")->required();
  fidi_cmd->add_option("--at", at, "one abscissa per cell")->required();

  std::string entry_name, params;
  auto* catalog_cmd = app.add_subcommand("catalog", "closed-form laws");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  auto* eval_cmd = catalog_cmd->add_subcommand("eval", "evaluate an entry on a grid");
  eval_cmd->add_option("name", entry_name, "entry name")->required();
  eval_cmd->add_option("--params", params, "name=value,...");
  eval_cmd->add_option("--grid", grid, "start,stop,count");
  eval_cmd->add_option("--at", at, "explicit abscissae");
  std::string quantity = "density";
  eval_cmd->add_option("--quantity", quantity, "density|cdf|phi")
      ->check(CLI::IsMember({"density", "cdf", "phi"}));

  long n = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string what = "base";
  auto* sample_cmd = app.add_subcommand("sample", "draw samples");
  sample_cmd->add_option("--law", dist, "distribution descriptor (JSON)");
  sample_cmd->add_option("--what", what, "base|mean|ggc")
      ->check(CLI::IsMember({"base", "mean", "ggc"}));
  sample_cmd->add_option("--theta", theta, "theta > 0 for mean and ggc");
  sample_cmd->add_option("--n", n, "number of draws");
  sample_cmd->add_option("--seed", seed, "seed (default $DMEANS_SEED)")
      ->each([&](const std::string&) { seed_given = true; });

  std::string suite;
  long samples = 100000;
  bool theta_given = false, dist_given = false;
  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  verify_cmd->add_option("--suite", suite, "suite name")->required();
  verify_cmd->add_option("--dist", dist, "restrict to one base")
      ->each([&](const std::string&) { dist_given = true; });
  verify_cmd->add_option("--theta", theta, "restrict to one theta")
      ->each([&](const std::string&) { theta_given = true; });
  verify_cmd->add_option("--seed", seed, "seed (default $DMEANS_SEED)")
      ->each([&](const std::string&) { seed_given = true; });
  verify_cmd->add_option("--samples", samples, "Monte Carlo sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    quad.validate();
    const auto base = [&] { return parse_distribution(dist); };

    if (*psi_cmd) {
      const auto F = base().functionals(quad);
      std::vector<std::vector<double>> rows;
      for (double l : parse_list(lambdas, "--lambda")) rows.push_back({l, F->psi(l)});
      out.table({"lambda", "psi"}, rows);
    } else if (*phi_cmd) {
      const auto F = base().functionals(quad);
      std::vector<std::vector<double>> rows;
      for (double t : parse_grid(grid, at)) rows.push_back({t, F->phi(t)});
      out.table({"t", "phi"}, rows);
    } else if (*density_cmd || *cdf_cmd) {
      const MeanLaw law(theta, base().functionals(quad));
      const bool dens = density_cmd->parsed();
      std::vector<std::vector<double>> rows;
      for (double x : parse_grid(grid, at)) {
        rows.push_back({x, dens ? mean_density(law, x) : mean_cdf(law, x)});
      }
      out.table({"x", dens ? "density" : "cdf"}, rows);
    } else if (*transform_cmd) {
      const BuiltDistribution b = base();
      const auto F = b.functionals(quad);
      std::function<double(double)> f;
      std::shared_ptr<MeanLaw> keep;
      if (op == "beta-scale") {
        if (theta == 1.0) {
          f = [&](double x) { return scaled_mean_density(*F, sigma, x); };
        } else {
          keep = std::make_shared<MeanLaw>(theta, thin(*b.spec, sigma), quad);
          f = [&](double x) { return mean_density(*keep, x); };
        }
      } else if (op == "tilt-forward") {
        keep = std::make_shared<MeanLaw>(theta, F);
        const RealFn xi = [&](double x) { return mean_density(*keep, x); };
        f = [&, xi](double y) { return tilt_forward_density(*F, theta, c, xi, y); };
      } else if (op == "tilt-inverse") {
        keep = std::make_shared<MeanLaw>(theta, tilt_base(*b.spec, 1.0), quad);
        const RealFn xi = [&](double y) { return mean_density(*keep, y); };
        f = [&, xi](double x) { return tilt_inverse_density(*F, theta, xi, x); };
      } else {
        const auto ggc = std::make_shared<GgcLaw>(theta, F);
        f = [&, ggc](double t) { return tilted_ggc_density(*ggc, c, t); };
      }
      std::vector<std::vector<double>> rows;
      for (double x : parse_grid(grid, at)) rows.push_back({x, f(x)});
      out.table({"x", "density"}, rows);
    } else if (*fidi_cmd) {
      const GgcLaw ggc(theta, base().functionals(quad));
      const PartitionSpec part{theta, parse_list(cells, "--cells")};
      const auto xs = parse_list(at, "--at");
      const FidiResult r = fidi_density(ggc, part, xs);
      const auto sig = part.sigmas();
      std::ostringstream os;
      if (out.format == "json") {
        json j = {{"joint", r.joint}, {"marginals", json::array()}};
        for (std::size_t i = 0; i < xs.size(); ++i) {
          j["marginals"].push_back({{"sigma", sig[i]}, {"x", xs[i]}, {"density", r.marginals[i]}});
        }
        os << j.dump(2) << "\n";
      } else {
        os << "kind,sigma,x,density\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
          os << "marginal," << num(sig[i]) << "," << num(xs[i]) << ","
             << num(r.marginals[i]) << "\n";
        }
        os << "joint,,," << num(r.joint) << "\n";
      }
      out.write(os.str());
    } else if (*catalog_cmd) {
      if (*list_cmd) {
        std::ostringstream os;
        if (out.format == "json") {
          json arr = json::array();
          for (const auto& e : catalog()) {
            arr.push_back({{"name", e.name}, {"params", e.params}, {"notes", e.notes},
                           {"has_cdf", static_cast<bool>(e.cdf)},
                           {"has_phi", static_cast<bool>(e.phi)}});
          }
          os << arr.dump(2) << "\n";
        } else {
          os << "name,params,notes\n";
          for (const auto& e : catalog()) {
            std::string ps;
            for (const auto& p : e.params) ps += (ps.empty() ? "" : ";") + p;
            os << e.name << "," << ps << ",\"" << e.notes << "\"\n";
          }
        }
        out.write(os.str());
      } else {
        const CatalogEntry& e = catalog_entry(entry_name);
        const CatalogParams p = catalog_params(e, parse_params(params));
        const auto& fn = quantity == "density" ? e.density
                         : quantity == "cdf"   ? e.cdf
                                               : e.phi;
        if (!fn) {
          throw DomainError("catalog entry '" + e.name + "' has no closed " + quantity);
        }
        std::vector<std::vector<double>> rows;
        for (double x : parse_grid(grid, at)) rows.push_back({x, fn(p, x)});
        out.table({"x", quantity}, rows);
      }
    } else if (*sample_cmd) {
      SamplerConfig cfg;
      cfg.seed = seed_given ? seed : default_seed();
      cfg.sample_count = n;
      cfg.validate();
      const BuiltDistribution b = base();
      std::function<double(Rng&)> draw;
      if (what == "base") {
        draw = [&](Rng& r) { return b.spec->sample(r); };
      } else if (what == "mean") {
        draw = [&](Rng& r) { return sample_dirichlet_mean(*b.spec, theta, cfg, r); };
      } else {
        draw = [&](Rng& r) { return sample_ggc(*b.spec, theta, cfg, r); };
      }
      std::vector<std::vector<double>> rows;
      for (double x : sample_many(draw, cfg)) rows.push_back({x});
      out.table({"x"}, rows);
    } else if (*verify_cmd) {
      SuiteOptions o;
      if (dist_given) o.dist = dist;
      if (theta_given) o.theta = theta;
      o.seed = seed_given ? seed : default_seed();
      o.samples = samples;
      o.quad = quad;
      const SuiteReport rep = run_suite(suite, o);
      out.write(rep.to_json().dump(2) + "\n");
      if (!rep.pass()) {
        error_json("numerical_quality", "suite '" + suite + "' failed",
                   {{"worst_ratio", rep.worst_ratio()}});
        return kExitQuality;
      }
    }
  } catch (const NumericalQualityError& e) {
    error_json("numerical_quality", e.what(), {{"estimate", e.estimate()}});
    return kExitQuality;
  } catch (const DomainError& e) {
    error_json("domain", e.what());
    return kExitDomain;
  } catch (const PreconditionError& e) {
    error_json("precondition", e.what());
    return kExitDomain;
  } catch (const ContractError& e) {
    error_json("contract", e.what());
    return kExitDomain;
  } catch (const ExistenceError& e) {
    error_json("existence", e.what());
    return kExitDomain;
  } catch (const json::exception& e) {
    error_json("domain", e.what());
    return kExitDomain;
  }
  return 0;
}
