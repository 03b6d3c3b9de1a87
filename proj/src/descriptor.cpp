#include "dmeans/descriptor.hpp"

#include <cmath>

#include "dmeans/catalog.hpp"
#include "dmeans/errors.hpp"

namespace dmeans {

namespace {

using nlohmann::json;

double number(const json& params, const char* key) {
  if (!params.contains(key) || !params.at(key).is_number()) {
    throw DomainError(std::string("descriptor: missing numeric parameter '") +
                      key + "'");
  }
  return params.at(key).get<double>();
}

template <class Spec>
std::shared_ptr<const DistributionSpec> share(Spec s) {
  return std::make_shared<const Spec>(std::move(s));
}

}  // namespace

FunctionalsPtr BuiltDistribution::functionals(const QuadratureConfig& q) const {
  return std::make_shared<const Functionals>(*spec, q, phi_closed, psi_closed);
}

BuiltDistribution build_distribution(const json& j) {
  if (j.is_string()) return build_distribution(json{{"kind", j}});
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw DomainError("descriptor: expected an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const json params = j.value("params", json::object());
  if (!params.is_object()) throw DomainError("descriptor: 'params' must be an object");

  BuiltDistribution out;
  if (kind == "uniform01") {
    out.spec = share(make_uniform01());
    out.phi_closed = phi_uniform;
    out.psi_closed = psi_uniform;
  } else if (kind == "point_mass") {
    const double a = number(params, "a");
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw DomainError("descriptor: point_mass needs a >= 0");
    }
    out.spec = share(make_point_mass(a));
  } else if (kind == "exp_ratio") {
    out.spec = share(make_exp_ratio());
    out.phi_closed = phi_exp_ratio;
    out.psi_closed = psi_exp_ratio;
  } else if (kind == "lamperti") {
    out.spec = share(make_lamperti(number(params, "alpha")));
  } else if (kind == "thinned") {
    if (!params.contains("base")) throw DomainError("descriptor: thinned needs 'base'");
    const double sigma = number(params, "sigma");
    const BuiltDistribution base = build_distribution(params.at("base"));
    out.spec = share(thin(*base.spec, sigma));
    if (base.phi_closed && sigma < 1.0) {
      out.phi_closed = [phi = base.phi_closed, sigma](double t) {
        return sigma * phi(t) + (1.0 - sigma) * std::log(t);
      };
    } else if (sigma == 1.0) {
      out.phi_closed = base.phi_closed;
    }
    if (base.psi_closed) {
      out.psi_closed = [psi = base.psi_closed, sigma](double l) {
        return sigma * psi(l);
      };
    }
  } else if (kind == "tilt_base") {
    if (!params.contains("base")) throw DomainError("descriptor: tilt_base needs 'base'");
    const double c = number(params, "c");
    const BuiltDistribution base = build_distribution(params.at("base"));
    out.spec = share(tilt_base(*base.spec, c));
    if (params.at("base") == json("exp_ratio") ||
        (params.at("base").is_object() &&
         params.at("base").value("kind", "") == "exp_ratio")) {
      out.phi_closed = [c](double y) { return phi_tilt_exp_ratio(c, y); };
    }
  } else if (kind.rfind("catalog:", 0) == 0) {
    const CatalogEntry& e = catalog_entry(kind.substr(8));
    if (!e.spec) {
      throw DomainError("descriptor: catalog entry '" + e.name +
                        "' is not a base distribution");
    }
    CatalogParams given;
    for (const auto& [k, v] : params.items()) {
      if (!v.is_number()) throw DomainError("descriptor: parameter '" + k + "' must be numeric");
      given[k] = v.get<double>();
    }
    const CatalogParams p = catalog_params(e, given);
    out.spec = share(e.spec(p));
    if (e.phi) out.phi_closed = [phi = e.phi, p](double t) { return phi(p, t); };
    if (e.name == "inv_G") {
      const double a = p.at("alpha");
      out.psi_closed = [a](double l) { return psi_inv_G(a, l); };
    }
  } else {
    throw DomainError("descriptor: unknown kind '" + kind + "'");
  }
  return out;
}

BuiltDistribution parse_distribution(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) j = text;
  return build_distribution(j);
}

}  // namespace dmeans
