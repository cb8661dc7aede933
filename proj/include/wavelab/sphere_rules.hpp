#pragma once

#include <functional>
#include <vector>

namespace wavelab {

/// Node on the unit sphere S^2 with its quadrature weight.
struct SpherePoint {
  double x;
  double y;
  double z;
  double weight;
};

/// Quadrature rule on S^2 exact for polynomials up to `order`; weights sum
/// to 4*pi, so integrate() returns the unnormalized surface integral.
class SphereRule {
 public:
  /// Embedded Lebedev rule of exactly this order.
  static SphereRule lebedev(int order);
  /// Gauss-Legendre in cos(theta) times trapezoid in phi.
  static SphereRule product(int order);
  /// Cheapest rule of at least this order: Lebedev while the table lasts,
  /// then a product rule.
  static SphereRule at_least(int order);

  int order() const { return order_; }
  bool is_lebedev() const { return lebedev_; }
  const std::vector<SpherePoint>& points() const { return points_; }

  double integrate(const std::function<double(double, double, double)>& f) const;

 private:
  SphereRule(int order, bool lebedev, std::vector<SpherePoint> points)
      : order_(order), lebedev_(lebedev), points_(std::move(points)) {}

  int order_;
  bool lebedev_;
  std::vector<SpherePoint> points_;
};

/// Orders available as embedded Lebedev tables, ascending.
std::vector<int> lebedev_orders();

}  // namespace wavelab
