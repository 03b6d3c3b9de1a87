#pragma once

#include <functional>
#include <limits>
#include <span>

namespace dmeans {

/// Tolerances shared by every integral in the library.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Upper-tail mass below which an infinite-support tail is treated as
  /// negligible by the existence probe and the CDF-grid fallback.
  double tail_delta = 1e-12;
  /// Half-width of the neighbourhood around a log or algebraic singularity
  /// that is integrated in its own local coordinate.
  double singularity_split_width = 1e-6;

  /// Throws DomainError unless every field is strictly positive and rel_tol < 1.
  void validate() const;

  /// Same config with tolerances tightened by `factor` (for nested integrals).
  QuadratureConfig tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    error += other.error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
};

/// Abscissa handed to integrands. `from_lower` / `from_upper` are distances to
/// the ends of the interval passed to `integrate`, computed without
/// cancellation for the half of the interval adjacent to that end. Integrands
/// with endpoint singularities should read the distance rather than
/// recomputing x - a or b - x.
struct Node {
  double x;
  double from_lower;
  double from_upper;
};

using NodeIntegrand = std::function<double(const Node&)>;
using Integrand = std::function<double(double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Double-exponential (tanh-sinh) rule on a finite interval, refined level by
/// level until successive estimates agree to tolerance or `max_level` is hit.
QuadResult tanh_sinh(const NodeIntegrand& f, double a, double b,
                     const QuadratureConfig& q, int max_level = 7);

/// Double-exponential (exp-sinh) rule on [a, +inf); abscissae are
/// a + scale * exp(pi/2 sinh t).
QuadResult exp_sinh(const NodeIntegrand& f, double a, double scale,
                    const QuadratureConfig& q, int max_level = 7);

/// Globally adaptive integration of f over [a, b] (b may be +inf). Each
/// segment uses the double-exponential rule; the segment with the largest
/// error estimate is bisected until the total meets tolerance or
/// `max_subdivisions` segments exist. Endpoint singularities of any
/// integrable power or log type are handled without special flags.
QuadResult integrate(const NodeIntegrand& f, double a, double b,
                     const QuadratureConfig& q);
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureConfig& q);

/// Integrates over consecutive segments [p0,p1], [p1,p2], ... so that kinks
/// and singularities at the breakpoints sit on segment ends. Nodes report
/// distances to the ends of their own segment.
QuadResult integrate_pieces(const NodeIntegrand& f,
                            std::span<const double> breakpoints,
                            const QuadratureConfig& q);
QuadResult integrate_pieces(const Integrand& f,
                            std::span<const double> breakpoints,
                            const QuadratureConfig& q);

/// Fixed 15-point Gauss-Kronrod rule with its embedded 7-point Gauss error
/// estimate. Intended for many short, smooth sub-intervals.
QuadResult gauss_kronrod15(const Integrand& f, double a, double b);

}  // namespace dmeans
