#include "dmeans/subordinators.hpp"

#include <cmath>
#include <numeric>

#include "dmeans/errors.hpp"

namespace dmeans {

std::vector<double> PartitionSpec::sigmas() const {
  std::vector<double> out;
  out.reserve(cells.size());
  for (double c : cells) out.push_back(theta * c);
  return out;
}

void PartitionSpec::validate() const {
  if (!(theta > 0.0)) throw PreconditionError("partition: theta must be > 0");
  if (cells.empty()) throw PreconditionError("partition: no cells");
  for (double c : cells) {
    if (!(c > 0.0)) throw PreconditionError("partition: cell length <= 0");
  }
  const double total = std::accumulate(cells.begin(), cells.end(), 0.0);
  if (std::abs(total - 1.0 / theta) > 1e-12) {
    throw PreconditionError("partition: cell lengths must sum to 1/theta");
  }
}

double ggc_laplace(const GgcLaw& ggc, double t, double lambda) {
  if (!(t > 0.0)) throw DomainError("ggc_laplace: t must be positive");
  if (!(lambda >= 0.0)) throw DomainError("ggc_laplace: lambda must be >= 0");
  if (lambda == 0.0) return 1.0;
  return std::exp(-t * ggc.theta * ggc.base->psi(lambda));
}

FidiResult fidi_density(const GgcLaw& ggc, const PartitionSpec& part,
                        const std::vector<double>& xs) {
  part.validate();
  if (part.theta != ggc.theta) {
    throw PreconditionError("fidi_density: partition theta differs from law");
  }
  if (xs.size() != part.cells.size()) {
    throw PreconditionError("fidi_density: need one abscissa per cell");
  }
  FidiResult out{1.0, {}};
  const std::vector<double> sig = part.sigmas();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double g = ggc_component_density(*ggc.base, std::min(sig[i], 1.0), xs[i]);
    out.marginals.push_back(g);
    out.joint *= g;
  }
  return out;
}

ConvolutionReport convolution_check(const Functionals& base, double sigma1,
                                    double sigma2, int points, double x_max) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0) || sigma1 + sigma2 > 1.0) {
    throw DomainError("convolution_check: need sigma1, sigma2 > 0 with sum <= 1");
  }
  if (points < 1 || !(x_max > 0.0)) {
    throw DomainError("convolution_check: bad grid");
  }
  ConvolutionReport rep{0.0, 0.0, {}, {}, {}};
  const QuadratureConfig q = base.quad();
  for (int i = 1; i <= points; ++i) {
    const double x = x_max * i / points;
    NodeIntegrand f = [&](const Node& n) {
      const double u = n.from_lower;      // distance from 0
      const double v = n.from_upper;      // distance from x
      return ggc_component_density(base, sigma1, u) *
             ggc_component_density(base, sigma2, v);
    };
    const double conv = integrate(f, 0.0, x, q).value;
    const double direct = ggc_component_density(base, sigma1 + sigma2, x);
    rep.grid.push_back(x);
    rep.convolved.push_back(conv);
    rep.direct.push_back(direct);
    const double gap = std::abs(conv - direct);
    if (gap > rep.max_abs_residual) {
      rep.max_abs_residual = gap;
      rep.at_x = x;
    }
  }
  return rep;
}

ConvolutionReport convolution_check(const DistributionSpec& base,
                                    double sigma1, double sigma2, int points,
                                    double x_max, QuadratureConfig q) {
  return convolution_check(*make_functionals(base, q), sigma1, sigma2, points,
                           x_max);
}

}  // namespace dmeans
