#include "wavelab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fftw_plan.hpp"
#include "wavelab/norms.hpp"

namespace wavelab {
namespace {

// (-1)^(k_0 + ... + k_{n-1}); the phase of exp(-i xi_k . x_0) with x_0 = -L/2.
double corner_phase(const GridSpec& grid, std::size_t flat) {
  const auto index = grid.unflatten(flat);
  int parity = 0;
  for (int d = 0; d < grid.dims(); ++d) parity += index[d];
  return (parity % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

SpectralField forward_transform(const RealField& field) {
  const auto& grid = field.grid();
  std::vector<Complex> data(field.samples().begin(), field.samples().end());
  detail::complex_dft(data, grid.dims(), grid.points(), FFTW_FORWARD);
  const double scale = grid.cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * grid.dims());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= scale * corner_phase(grid, i);
  return SpectralField(grid, std::move(data));
}

RealField inverse_transform(const SpectralField& spectrum) {
  const auto& grid = spectrum.grid();
  std::vector<Complex> data(spectrum.coeffs().begin(), spectrum.coeffs().end());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= corner_phase(grid, i);
  detail::complex_dft(data, grid.dims(), grid.points(), FFTW_BACKWARD);
  const double scale =
      grid.frequency_cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * grid.dims());
  std::vector<double> samples(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) samples[i] = scale * data[i].real();
  return RealField(grid, std::move(samples));
}

double evaluate_at(const SpectralField& spectrum, std::span<const double> point) {
  const auto& grid = spectrum.grid();
  if (static_cast<int>(point.size()) < grid.dims()) {
    throw std::invalid_argument("evaluate_at: point has too few coordinates");
  }
  const int n = grid.points();
  const int dims = grid.dims();
  std::vector<std::vector<Complex>> basis(dims, std::vector<Complex>(n));
  for (int d = 0; d < dims; ++d) {
    for (int i = 0; i < n; ++i) {
      const double phase = grid.frequency(i) * point[d];
      basis[d][i] = grid.is_nyquist(i) ? Complex(std::cos(phase), 0.0)
                                       : Complex(std::cos(phase), std::sin(phase));
    }
  }
  const auto coeffs = spectrum.coeffs();
  Complex total{};
  if (dims == 1) {
    for (int i = 0; i < n; ++i) total += coeffs[i] * basis[0][i];
  } else if (dims == 2) {
    for (int i = 0; i < n; ++i) {
      Complex row{};
      for (int j = 0; j < n; ++j) row += coeffs[static_cast<std::size_t>(i) * n + j] * basis[1][j];
      total += row * basis[0][i];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      Complex plane{};
      for (int j = 0; j < n; ++j) {
        Complex row{};
        const std::size_t offset = (static_cast<std::size_t>(i) * n + j) * n;
        for (int k = 0; k < n; ++k) row += coeffs[offset + k] * basis[2][k];
        plane += row * basis[1][j];
      }
      total += plane * basis[0][i];
    }
  }
  const double scale = grid.frequency_cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * dims);
  return scale * total.real();
}

SpectralField apply_radial_multiplier(const SpectralField& spectrum,
                                      const std::function<double(double)>& multiplier) {
  const auto radii = spectrum.grid().radial_frequencies();
  std::vector<Complex> out(spectrum.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = multiplier(radii[i]) * spectrum[i];
  return SpectralField(spectrum.grid(), std::move(out));
}

SpectralField derivative(const SpectralField& spectrum, int axis) {
  const auto& grid = spectrum.grid();
  if (axis < 0 || axis >= grid.dims()) throw std::invalid_argument("derivative: bad axis");
  std::vector<Complex> out(spectrum.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int k = grid.unflatten(i)[axis];
    const double xi = grid.is_nyquist(k) ? 0.0 : grid.frequency(k);
    out[i] = Complex(0.0, xi) * spectrum[i];
  }
  return SpectralField(grid, std::move(out));
}

SpectralField laplacian(const SpectralField& spectrum) {
  return apply_radial_multiplier(spectrum, [](double r) { return -r * r; });
}

double spectral_tail_fraction(const SpectralField& spectrum) {
  const auto& grid = spectrum.grid();
  const int cutoff = 3 * grid.points() / 8;
  std::vector<double> all(spectrum.size());
  std::vector<double> tail(spectrum.size(), 0.0);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    all[i] = std::norm(spectrum[i]);
    const auto index = grid.unflatten(i);
    for (int d = 0; d < grid.dims(); ++d) {
      if (std::abs(grid.wavenumber(index[d])) > cutoff) {
        tail[i] = all[i];
        break;
      }
    }
  }
  const double total = pairwise_sum(all);
  return total == 0.0 ? 0.0 : pairwise_sum(tail) / total;
}

}  // namespace wavelab
