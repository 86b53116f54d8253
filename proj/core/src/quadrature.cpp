#include "arcbeta/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace arcbeta {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

// One tanh-sinh abscissa/weight pair for t > 0, stored by its distance to
// the interval edge: delta = 1 - |u| where u = tanh((pi/2) sinh t). Keeping
// delta instead of u preserves full relative precision next to the edge.
struct Node {
  double delta;
  double weight;  // u'(t) = (pi/2) cosh(t) / cosh^2((pi/2) sinh t)
};

Node make_node(double t) {
  double z = kHalfPi * std::sinh(t);
  double q = std::exp(-2.0 * z);  // z > 0 for t > 0
  double delta = 2.0 * q / (1.0 + q);
  double weight = kHalfPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
  return {delta, weight};
}

// Node tables per refinement level. Level 0 holds t = h0, 2*h0, ...;
// level k > 0 holds the odd multiples of h0 / 2^k. Generation stops once
// delta underflows to zero: such nodes cannot move any representable x off
// the interval edge.
struct NodeTables {
  std::vector<std::vector<Node>> levels;
  double center_weight;  // t = 0: u = 0, weight pi/2

  NodeTables() {
    levels.resize(kMaxQuadLevel + 1);
    center_weight = kHalfPi;
    constexpr double kH0 = 1.0;
    constexpr double kTMax = 6.6;  // delta underflows near t ~ 6.1
    for (int j = 1; j * kH0 <= kTMax; ++j) {
      Node n = make_node(j * kH0);
      if (n.delta <= 0.0) break;
      levels[0].push_back(n);
    }
    for (int level = 1; level <= kMaxQuadLevel; ++level) {
      double h = kH0 / static_cast<double>(1 << level);
      for (int j = 1; (2 * j - 1) * h <= kTMax; ++j) {
        Node n = make_node((2 * j - 1) * h);
        if (n.delta <= 0.0) break;
        levels[level].push_back(n);
      }
    }
  }
};

const NodeTables& node_tables() {
  static const NodeTables tables;
  return tables;
}

}  // namespace

QuadratureEstimate integrate(const OffsetIntegrand& f, double a, double b,
                             double tol) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw std::domain_error("integrate requires finite a < b");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate requires tol > 0");
  }

  const NodeTables& tables = node_tables();
  const double hw = 0.5 * (b - a);  // half-width
  std::int64_t evals = 0;

  // Sums one node pair (t = +-|t|), skipping abscissae that round onto or
  // past an endpoint.
  auto node_pair = [&](const Node& n) {
    double sum = 0.0;
    double d = hw * n.delta;       // distance from the nearer endpoint
    double far = hw * (2.0 - n.delta);
    double x_lo = a + d;
    if (x_lo > a && x_lo < b) {
      sum += n.weight * f(x_lo, d, far);
      ++evals;
    }
    double x_hi = b - d;
    if (x_hi > a && x_hi < b) {
      sum += n.weight * f(x_hi, far, d);
      ++evals;
    }
    return sum;
  };

  double mid = a + hw;
  double center = tables.center_weight * f(mid, mid - a, b - mid);
  ++evals;

  double level0 = center;
  for (const Node& n : tables.levels[0]) level0 += node_pair(n);

  double h = 1.0;
  double previous = hw * h * level0;
  double value = previous;
  double diff = std::fabs(value);

  for (int level = 1; level <= kMaxQuadLevel; ++level) {
    double new_sum = 0.0;
    for (const Node& n : tables.levels[level]) new_sum += node_pair(n);
    h *= 0.5;
    value = 0.5 * previous + hw * h * new_sum;
    diff = std::fabs(value - previous);
    previous = value;
    if (level >= 2 && diff <= tol * std::fmax(1.0, std::fabs(value))) {
      return {value, diff, evals};
    }
  }
  throw ConvergenceError(
      "tanh-sinh integration did not converge within the level budget",
      QuadratureEstimate{value, diff, evals});
}

QuadratureEstimate integrate(const std::function<double(double)>& f, double a,
                             double b, double tol) {
  return integrate(
      [&f](double x, double /*from_a*/, double /*to_b*/) { return f(x); }, a,
      b, tol);
}

}  // namespace arcbeta
