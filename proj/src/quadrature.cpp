#include "wavelab/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <limits>
#include <vector>

namespace wavelab {
namespace {

// Deep enough for kinks and endpoint layers; anything needing more is
// reported as not converged rather than refined without end.
constexpr unsigned kMaxDepth = 20;

struct Panel {
  double value;
  double error;
  double l1;
};

Panel gauss_kronrod_panel(const ScalarFunction& f, double a, double b, double rel_tol, unsigned depth) {
  Panel panel{0.0, 0.0, 0.0};
  panel.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, depth, rel_tol, &panel.error, &panel.l1);
  return panel;
}

// Integrates over consecutive panels and judges convergence on the totals:
// total error <= rel_tol * total L1. A first non-adaptive pass estimates the
// L1 mass; only panels whose error exceeds their even share of the budget
// are refined, each to that share. Panels carrying a negligible part of the
// integral therefore never chase a relative accuracy below their roundoff
// floor.
QuadratureResult integrate_edges(const ScalarFunction& f, const std::vector<double>& edges, double rel_tol) {
  std::vector<Panel> panels;
  std::vector<std::pair<double, double>> ranges;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    ranges.emplace_back(edges[i], edges[i + 1]);
    panels.push_back(gauss_kronrod_panel(f, edges[i], edges[i + 1], rel_tol, 0));
    l1 += panels.back().l1;
  }
  const double share = rel_tol * l1 / std::max<std::size_t>(panels.size(), 1);
  double value = 0.0, error = 0.0, total_l1 = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    if (!(panels[i].error <= share)) {
      const double tol = panels[i].l1 > 0.0 ? std::max(rel_tol, share / panels[i].l1) : rel_tol;
      panels[i] = gauss_kronrod_panel(f, ranges[i].first, ranges[i].second, tol, kMaxDepth);
    }
    value += panels[i].value;
    error += panels[i].error;
    total_l1 += panels[i].l1;
  }
  const bool ok = std::isfinite(value) &&
                  error <= std::max(rel_tol * total_l1, 1e3 * std::numeric_limits<double>::min());
  return {value, error, ok};
}

}  // namespace

QuadratureResult integrate(const ScalarFunction& f, double a, double b, double rel_tol,
                           std::span<const double> breakpoints) {
  std::vector<double> edges{a};
  for (double p : breakpoints) {
    if (p > a && p < b) edges.push_back(p);
  }
  std::sort(edges.begin() + 1, edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.push_back(b);

  return integrate_edges(f, edges, rel_tol);
}

QuadratureResult integrate_endpoint_singular(const ScalarFunction& f, double a, double b,
                                             double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> rule;
  QuadratureResult result;
  double l1 = 0.0;
  result.value = rule.integrate(f, a, b, rel_tol, &result.error, &l1);
  result.converged = std::isfinite(result.value) && result.error <= std::max(10.0 * rel_tol * l1, 1e-300);
  return result;
}

QuadratureResult integrate_panels(const ScalarFunction& f, double a, double b, double panel_width,
                                  double rel_tol) {
  const auto count = static_cast<std::size_t>(std::ceil((b - a) / panel_width));
  // Edges from the index, not by accumulation, so they stay on the intended
  // lattice (e.g. zeros of an oscillatory factor).
  std::vector<double> edges;
  for (std::size_t i = 0; i < count; ++i) edges.push_back(a + static_cast<double>(i) * panel_width);
  edges.push_back(b);
  return integrate_edges(f, edges, rel_tol);
}

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
  GaussLegendre rule;
  // legendre_p_zeros returns the nonnegative zeros in increasing order.
  const auto positive = boost::math::legendre_p_zeros<double>(count);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    if (*it != 0.0) rule.nodes.push_back(-*it);
  }
  for (double x : positive) rule.nodes.push_back(x);
  for (double x : rule.nodes) {
    const double dp = boost::math::legendre_p_prime(count, x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace wavelab
