#pragma once

#include <array>
#include <span>

#include "wavelab/sphere_rules.hpp"

namespace wavelab::detail {

struct LebedevTable {
  int order;
  std::span<const SpherePoint> points;
};

/// Embedded Lebedev-Laikov rules, weights normalized to total 4*pi,
/// ascending order.
const std::array<LebedevTable, 9>& lebedev_tables();

}  // namespace wavelab::detail
