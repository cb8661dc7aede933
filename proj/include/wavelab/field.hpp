#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wavelab/grid.hpp"

namespace wavelab {

using Complex = std::complex<double>;

/// A point of R^n handed to sampled functions; only the first dims entries
/// are meaningful.
using PointFunction = std::function<double(std::span<const double>)>;

/// Real samples on a grid. Immutable; all samples finite.
class RealField {
 public:
  RealField(GridSpec grid, std::vector<double> samples);

  /// Samples f at every grid point.
  static RealField sample(const GridSpec& grid, const PointFunction& f);
  static RealField zeros(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }

 private:
  GridSpec grid_;
  std::vector<double> samples_;
};

/// Discrete Fourier coefficients on the frequency lattice of a grid, stored
/// in DFT order (see GridSpec).
class SpectralField {
 public:
  SpectralField(GridSpec grid, std::vector<Complex> coeffs);

  static SpectralField zeros(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

 private:
  GridSpec grid_;
  std::vector<Complex> coeffs_;
};

/// Phase-space pair (u, u_t), held in its spectral view.
struct StateVector {
  StateVector(SpectralField u_hat, SpectralField v_hat);

  const GridSpec& grid() const { return u.grid(); }

  SpectralField u;
  SpectralField v;
};

/// Index of -k for the flat lattice index of k (Nyquist indices map to
/// themselves).
std::size_t mirror_index(const GridSpec& grid, std::size_t flat);

/// True when F(-xi) = conj(F(xi)) to the given relative tolerance.
bool is_conjugate_symmetric(const SpectralField& field, double rel_tol = 1e-12);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double scale, const SpectralField& a);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace wavelab
