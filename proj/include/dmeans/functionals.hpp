#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "dmeans/dist_core.hpp"
#include "dmeans/quadrature.hpp"

namespace dmeans {

/// Levy exponent psi_F(lambda) = E log(1 + lambda X), atoms included.
/// Throws ExistenceError when the upper tail makes the expectation diverge.
double psi(const DistributionSpec& F, double lambda,
           const QuadratureConfig& q = {});

/// Log-distance functional Phi_F(t) = E[log|t - X|; X != t]. An atom sitting
/// exactly at t contributes nothing.
double phi(const DistributionSpec& F, double t, const QuadratureConfig& q = {});

/// sigma * Phi_base(t) + (1 - sigma) * log(t).
double phi_thinned(const ThinnedSpec& F, double t,
                   const QuadratureConfig& q = {});

/// True iff log(1 + x) * P(X > x) vanishes along x = 2^k; this is the tail
/// test that psi and phi apply before integrating an infinite support.
bool existence_check(const DistributionSpec& F, const QuadratureConfig& q = {});

/// E[g(X)] over the continuous part of F. The integrand receives the node
/// together with exact distances to the nearest breakpoint on either side,
/// where `extra_breaks` are added to the support's own breakpoints.
struct PieceNode {
  double x;
  double below;  // x - (left end of its piece)
  double above;  // (right end of its piece) - x
  double left;   // left end of its piece
  double right;  // right end of its piece
};
QuadResult expect_continuous(const DistributionSpec& F,
                             const std::function<double(const PieceNode&)>& g,
                             const std::vector<double>& extra_breaks,
                             const QuadratureConfig& q);

/// Memoised Phi and psi for one base distribution. Optional closed forms
/// replace the generic quadrature. Safe for concurrent use.
class Functionals {
 public:
  explicit Functionals(DistributionSpec spec, QuadratureConfig q = {},
                       RealFn phi_closed = {}, RealFn psi_closed = {});

  const DistributionSpec& spec() const { return *spec_; }
  std::shared_ptr<const DistributionSpec> spec_ptr() const { return spec_; }
  const QuadratureConfig& quad() const { return quad_; }

  double phi(double t) const;
  double psi(double lambda) const;
  double cdf(double x) const { return spec_->cdf(x); }
  double sf(double x) const { return spec_->sf(x); }

 private:
  double cached(std::unordered_map<double, double>& cache, const RealFn& fn,
                double arg) const;

  std::shared_ptr<const DistributionSpec> spec_;
  QuadratureConfig quad_;
  RealFn phi_fn_;
  RealFn psi_fn_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<double, double> phi_cache_;
  mutable std::unordered_map<double, double> psi_cache_;
};

using FunctionalsPtr = std::shared_ptr<const Functionals>;

FunctionalsPtr make_functionals(const DistributionSpec& spec,
                                const QuadratureConfig& q = {},
                                RealFn phi_closed = {}, RealFn psi_closed = {});

/// sin(pi * u) where u = k + r is supplied through both u and 1 - u so that
/// values of u close to 1 keep full relative accuracy.
double sin_pi_pair(double u, double one_minus_u);

}  // namespace dmeans
