#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace wavelab {

/// Periodic box [-L/2, L/2)^n sampled with N points per axis.
///
/// Samples sit at x_i = -L/2 + i*dx, i = 0..N-1. The frequency lattice per
/// axis is xi_k = 2*pi*k/L with k in {-N/2, ..., N/2-1}; the storage index of
/// k follows the usual DFT order (k for k < N/2, k - N otherwise). Flat
/// indices are row-major with axis 0 slowest.
class GridSpec {
 public:
  GridSpec(int dims, double box_length, int points_per_axis);

  int dims() const { return dims_; }
  double box_length() const { return box_length_; }
  int points() const { return points_; }
  std::size_t size() const { return size_; }

  double spacing() const { return box_length_ / points_; }
  double frequency_spacing() const;
  /// dx^n, the volume of one sample cell.
  double cell_volume() const;
  /// (2*pi/L)^n, the volume of one lattice cell in frequency space.
  double frequency_cell_volume() const;

  double coordinate(int index) const { return -0.5 * box_length_ + index * spacing(); }
  int wavenumber(int index) const { return index < points_ / 2 ? index : index - points_; }
  double frequency(int index) const { return wavenumber(index) * frequency_spacing(); }
  bool is_nyquist(int index) const { return index == points_ / 2; }

  /// Largest |xi| per axis (the Nyquist frequency pi/dx).
  double nyquist_frequency() const;

  std::array<int, 3> unflatten(std::size_t flat) const;
  std::size_t flatten(const std::array<int, 3>& index) const;

  /// Per-axis coordinate table, length N.
  std::vector<double> coordinates() const;
  /// Per-axis frequency table in storage order, length N.
  std::vector<double> frequencies() const;
  /// |xi| at every flat index.
  std::vector<double> radial_frequencies() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int dims_;
  double box_length_;
  int points_;
  std::size_t size_;
};

/// Validates and builds a grid. Throws std::invalid_argument on odd N,
/// N < 8, L <= 0 or dims outside {1,2,3}.
GridSpec make_grid(int dims, double box_length, int points_per_axis);

/// Latest time for which a periodic run stays a faithful surrogate of the
/// whole-space problem: data in B(0, data_radius) have not wrapped around to
/// any probe within probe_radius of the origin.
double causal_time_limit(const GridSpec& grid, double data_radius, double probe_radius);

}  // namespace wavelab
