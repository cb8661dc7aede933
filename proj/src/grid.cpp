#include "wavelab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavelab {

GridSpec::GridSpec(int dims, double box_length, int points_per_axis)
    : dims_(dims), box_length_(box_length), points_(points_per_axis), size_(1) {
  if (dims < 1 || dims > 3) {
    throw std::invalid_argument("grid: dims must be 1, 2 or 3, got " + std::to_string(dims));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw std::invalid_argument("grid: box length must be positive and finite");
  }
  if (points_per_axis < 8 || points_per_axis % 2 != 0) {
    throw std::invalid_argument("grid: points per axis must be even and >= 8, got " +
                                std::to_string(points_per_axis));
  }
  for (int d = 0; d < dims; ++d) size_ *= static_cast<std::size_t>(points_per_axis);
}

double GridSpec::frequency_spacing() const { return 2.0 * std::numbers::pi / box_length_; }

double GridSpec::cell_volume() const { return std::pow(spacing(), dims_); }

double GridSpec::frequency_cell_volume() const { return std::pow(frequency_spacing(), dims_); }

double GridSpec::nyquist_frequency() const { return std::numbers::pi / spacing(); }

std::array<int, 3> GridSpec::unflatten(std::size_t flat) const {
  std::array<int, 3> index{0, 0, 0};
  const auto n = static_cast<std::size_t>(points_);
  for (int d = dims_ - 1; d >= 0; --d) {
    index[d] = static_cast<int>(flat % n);
    flat /= n;
  }
  return index;
}

std::size_t GridSpec::flatten(const std::array<int, 3>& index) const {
  std::size_t flat = 0;
  for (int d = 0; d < dims_; ++d) flat = flat * points_ + static_cast<std::size_t>(index[d]);
  return flat;
}

std::vector<double> GridSpec::coordinates() const {
  std::vector<double> x(points_);
  for (int i = 0; i < points_; ++i) x[i] = coordinate(i);
  return x;
}

std::vector<double> GridSpec::frequencies() const {
  std::vector<double> xi(points_);
  for (int i = 0; i < points_; ++i) xi[i] = frequency(i);
  return xi;
}

std::vector<double> GridSpec::radial_frequencies() const {
  const auto xi = frequencies();
  std::vector<double> squared(size_, 0.0);
  const std::size_t n = points_;
  // Accumulate xi_d^2 axis by axis; the stride of axis d is n^(dims-1-d).
  std::size_t stride = 1;
  for (int d = dims_ - 1; d >= 0; --d) {
    for (std::size_t flat = 0; flat < size_; ++flat) {
      const double k = xi[(flat / stride) % n];
      squared[flat] += k * k;
    }
    stride *= n;
  }
  for (auto& s : squared) s = std::sqrt(s);
  return squared;
}

GridSpec make_grid(int dims, double box_length, int points_per_axis) {
  return GridSpec(dims, box_length, points_per_axis);
}

double causal_time_limit(const GridSpec& grid, double data_radius, double probe_radius) {
  return 0.5 * grid.box_length() - data_radius - probe_radius;
}

}  // namespace wavelab
