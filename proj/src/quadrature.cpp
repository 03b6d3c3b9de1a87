#include "dmeans/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "dmeans/errors.hpp"

namespace dmeans {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
    throw DomainError("QuadratureConfig: rel_tol must lie in (0,1)");
  }
  if (!(abs_tol > 0.0) || max_subdivisions <= 0 || !(tail_delta > 0.0) ||
      !(singularity_split_width > 0.0)) {
    throw DomainError("QuadratureConfig: all tolerances must be positive");
  }
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig out = *this;
  out.rel_tol = std::max(rel_tol * factor, 1e-15);
  out.abs_tol = std::max(abs_tol * factor, 1e-300);
  return out;
}

namespace {

constexpr int kMaxLevel = 10;
constexpr int kMinLevel = 3;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Positive-t half of a double-exponential rule; the negative half is
// obtained by symmetry (tanh-sinh) or stored separately (exp-sinh).
struct TanhSinhNode {
  double complement;  // 1 - tanh(pi/2 sinh t), accurate for large t
  double weight;      // d/dt tanh(pi/2 sinh t)
};

struct ExpSinhNode {
  double offset;  // exp(pi/2 sinh t)
  double weight;  // d/dt of offset
};

using TanhSinhLevels = std::array<std::vector<TanhSinhNode>, kMaxLevel + 1>;
using ExpSinhLevels = std::array<std::vector<ExpSinhNode>, kMaxLevel + 1>;

TanhSinhNode tanh_sinh_node(double t) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2.0 * u);
  const double denom = 1.0 + e;
  return {2.0 * e / denom, kHalfPi * std::cosh(t) * 4.0 * e / (denom * denom)};
}

const TanhSinhLevels& tanh_sinh_table() {
  static const TanhSinhLevels table = [] {
    TanhSinhLevels levels;
    const double t_max = 6.1;  // complement ~ 1e-300
    for (int k = 0; k <= kMaxLevel; ++k) {
      const double h = std::ldexp(1.0, -k);
      for (long j = (k == 0 ? 1 : 1);; j += (k == 0 ? 1 : 2)) {
        const double t = j * h;
        if (t > t_max) break;
        levels[k].push_back(tanh_sinh_node(t));
      }
    }
    return levels;
  }();
  return table;
}

const ExpSinhLevels& exp_sinh_table() {
  static const ExpSinhLevels table = [] {
    ExpSinhLevels levels;
    const double t_max = 6.7;  // offset spans ~1e-300 .. 1e300
    for (int k = 0; k <= kMaxLevel; ++k) {
      const double h = std::ldexp(1.0, -k);
      auto push = [&](double t) {
        const double e = std::exp(kHalfPi * std::sinh(t));
        levels[k].push_back({e, kHalfPi * std::cosh(t) * e});
      };
      if (k == 0) push(0.0);
      for (long j = 1;; j += (k == 0 ? 1 : 2)) {
        const double t = j * h;
        if (t > t_max) break;
        push(t);
        push(-t);
      }
    }
    return levels;
  }();
  return table;
}

double finite_or_zero(double v, long& bad) {
  if (std::isfinite(v)) return v;
  ++bad;
  return 0.0;
}

bool within(double err, double value, const QuadratureConfig& q) {
  return err <= std::max(q.abs_tol, q.rel_tol * std::abs(value));
}

}  // namespace

QuadResult tanh_sinh(const NodeIntegrand& f, double a, double b,
                     const QuadratureConfig& q, int max_level) {
  QuadResult res;
  if (!(b > a)) return res;
  max_level = std::clamp(max_level, kMinLevel, kMaxLevel);
  const auto& table = tanh_sinh_table();
  const double half = 0.5 * (b - a);
  const double width = b - a;
  long bad = 0;

  double sum = half * finite_or_zero(f({a + half, half, half}), bad) * kHalfPi;
  res.evaluations = 1;
  double previous = 0.0;
  for (int k = 0; k <= max_level; ++k) {
    for (const auto& node : table[k]) {
      const double d = half * node.complement;
      if (d <= 0.0) continue;
      const double w = half * node.weight;
      const double right = f({b - d, width - d, d});
      const double left = f({a + d, d, width - d});
      sum += w * (finite_or_zero(right, bad) + finite_or_zero(left, bad));
      res.evaluations += 2;
    }
    const double estimate = std::ldexp(sum, -k);
    if (k >= 1) {
      res.error = std::abs(estimate - previous);
      res.value = estimate;
      if (k >= kMinLevel && within(res.error, estimate, q)) {
        res.converged = true;
        return res;
      }
    }
    previous = estimate;
  }
  res.converged = false;
  return res;
}

QuadResult exp_sinh(const NodeIntegrand& f, double a, double scale,
                    const QuadratureConfig& q, int max_level) {
  QuadResult res;
  max_level = std::clamp(max_level, kMinLevel, kMaxLevel);
  const auto& table = exp_sinh_table();
  long bad = 0;
  double sum = 0.0;
  double previous = 0.0;
  for (int k = 0; k <= max_level; ++k) {
    for (const auto& node : table[k]) {
      const double d = scale * node.offset;
      const double w = scale * node.weight;
      if (!std::isfinite(d) || !std::isfinite(w) || d <= 0.0) continue;
      const double v = f({a + d, d, kInf});
      sum += w * finite_or_zero(v, bad);
      ++res.evaluations;
    }
    const double estimate = std::ldexp(sum, -k);
    if (k >= 1) {
      res.error = std::abs(estimate - previous);
      res.value = estimate;
      if (k >= kMinLevel && within(res.error, estimate, q)) {
        res.converged = true;
        return res;
      }
    }
    previous = estimate;
  }
  res.converged = false;
  return res;
}

namespace {

struct Segment {
  double lo;
  double hi;  // +inf for a tail segment
  double scale;
  QuadResult result;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.result.error < y.result.error;
  }
};

}  // namespace

QuadResult integrate(const NodeIntegrand& f, double a, double b,
                     const QuadratureConfig& q) {
  QuadResult total;
  if (!(b > a)) return total;
  const bool infinite = std::isinf(b);

  auto evaluate = [&](Segment& s) {
    const bool touches_lo = s.lo == a;
    const bool touches_hi = s.hi == b;
    const double lo_gap = s.lo - a;
    const double hi_gap = b - s.hi;
    NodeIntegrand g = [&, touches_lo, touches_hi, lo_gap, hi_gap](const Node& n) {
      Node m = n;
      m.from_lower = touches_lo ? n.from_lower : lo_gap + n.from_lower;
      if (infinite) {
        m.from_upper = kInf;
      } else {
        m.from_upper = touches_hi ? n.from_upper : hi_gap + n.from_upper;
      }
      return f(m);
    };
    if (std::isinf(s.hi)) {
      s.result = exp_sinh(g, s.lo, s.scale, q, 6);
    } else {
      s.result = tanh_sinh(g, s.lo, s.hi, q, 6);
    }
    if (!s.result.converged) s.result.error = std::max(s.result.error, 1e-300);
  };

  std::priority_queue<Segment, std::vector<Segment>, ByError> queue;
  long evaluations = 0;
  auto push = [&](Segment s) {
    evaluate(s);
    evaluations += s.result.evaluations;
    queue.push(s);
  };

  if (infinite) {
    const double s = std::max(1.0, std::abs(a));
    push({a, a + s, s, {}});
    push({a + s, kInf, s, {}});
  } else {
    push({a, b, 0.0, {}});
  }

  auto totals = [&]() {
    QuadResult sum;
    auto copy = queue;
    while (!copy.empty()) {
      sum += copy.top().result;
      copy.pop();
    }
    return sum;
  };

  total = totals();
  while (!within(total.error, total.value, q) &&
         static_cast<int>(queue.size()) < q.max_subdivisions) {
    Segment worst = queue.top();
    queue.pop();
    if (std::isinf(worst.hi)) {
      const double split = worst.lo + 3.0 * worst.scale;
      push({worst.lo, split, 0.0, {}});
      push({split, kInf, 4.0 * worst.scale, {}});
    } else {
      const double mid = 0.5 * (worst.lo + worst.hi);
      if (!(mid > worst.lo && mid < worst.hi)) {
        queue.push(worst);
        break;
      }
      push({worst.lo, mid, 0.0, {}});
      push({mid, worst.hi, 0.0, {}});
    }
    total = totals();
  }
  total.converged = within(total.error, total.value, q);
  total.evaluations = evaluations;
  return total;
}

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureConfig& q) {
  return integrate(NodeIntegrand([&f](const Node& n) { return f(n.x); }), a,
                   b, q);
}

QuadResult integrate_pieces(const NodeIntegrand& f,
                            std::span<const double> breakpoints,
                            const QuadratureConfig& q) {
  QuadResult total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      total += integrate(f, breakpoints[i], breakpoints[i + 1], q);
    }
  }
  return total;
}

QuadResult integrate_pieces(const Integrand& f,
                            std::span<const double> breakpoints,
                            const QuadratureConfig& q) {
  return integrate_pieces(
      NodeIntegrand([&f](const Node& n) { return f(n.x); }), breakpoints, q);
}

QuadResult gauss_kronrod15(const Integrand& f, double a, double b) {
  static constexpr std::array<double, 8> xgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * wgk[7];
  double gauss = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += wgk[j] * pair;
    if (j % 2 == 1) gauss += wg[j / 2] * pair;
  }
  QuadResult res;
  res.value = kronrod * half;
  res.error = std::abs((kronrod - gauss) * half);
  res.evaluations = 15;
  return res;
}

}  // namespace dmeans
