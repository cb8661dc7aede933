#include "wavelab/sphere_rules.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lebedev_tables.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/quadrature.hpp"

namespace wavelab {

SphereRule SphereRule::lebedev(int order) {
  for (const auto& table : detail::lebedev_tables()) {
    if (table.order == order) {
      return SphereRule(order, true, {table.points.begin(), table.points.end()});
    }
  }
  throw std::invalid_argument("no embedded Lebedev rule of order " + std::to_string(order));
}

SphereRule SphereRule::product(int order) {
  if (order < 1) throw std::invalid_argument("sphere rule order must be positive");
  const int polar = (order + 2) / 2;  // 2*polar - 1 >= order
  const int azimuthal = order + 1;
  const auto gl = gauss_legendre(polar);
  std::vector<SpherePoint> points;
  points.reserve(static_cast<std::size_t>(polar) * azimuthal);
  const double dphi = 2.0 * std::numbers::pi / azimuthal;
  for (int i = 0; i < polar; ++i) {
    const double c = gl.nodes[i];
    const double s = std::sqrt(1.0 - c * c);
    for (int j = 0; j < azimuthal; ++j) {
      const double phi = j * dphi;
      points.push_back({s * std::cos(phi), s * std::sin(phi), c, gl.weights[i] * dphi});
    }
  }
  return SphereRule(order, false, std::move(points));
}

SphereRule SphereRule::at_least(int order) {
  for (const auto& table : detail::lebedev_tables()) {
    if (table.order >= order) return lebedev(table.order);
  }
  return product(order);
}

double SphereRule::integrate(const std::function<double(double, double, double)>& f) const {
  std::vector<double> terms(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    terms[i] = p.weight * f(p.x, p.y, p.z);
  }
  return pairwise_sum(terms);
}

std::vector<int> lebedev_orders() {
  std::vector<int> orders;
  for (const auto& table : detail::lebedev_tables()) orders.push_back(table.order);
  return orders;
}

}  // namespace wavelab
