#include "wavelab/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wavelab/fourier.hpp"

namespace wavelab {

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double l2_norm(const RealField& field) {
  std::vector<double> squares(field.size());
  for (std::size_t i = 0; i < squares.size(); ++i) squares[i] = field[i] * field[i];
  return std::sqrt(field.grid().cell_volume() * pairwise_sum(squares));
}

namespace {

double weighted_spectral_norm(const SpectralField& spectrum, double (*weight)(double, double),
                              double parameter) {
  const auto radii = spectrum.grid().radial_frequencies();
  std::vector<double> terms(spectrum.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double w = weight(radii[i], parameter);
    terms[i] = w * w * std::norm(spectrum[i]);
  }
  return std::sqrt(spectrum.grid().frequency_cell_volume() * pairwise_sum(terms));
}

}  // namespace

double l2_norm(const SpectralField& spectrum) {
  return weighted_spectral_norm(spectrum, [](double, double) { return 1.0; }, 0.0);
}

double h1_seminorm(const SpectralField& spectrum) {
  return weighted_spectral_norm(spectrum, [](double r, double) { return r; }, 0.0);
}

double h1_seminorm(const RealField& field) { return h1_seminorm(forward_transform(field)); }

double hs_norm(const SpectralField& spectrum, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("hs_norm: s must be nonnegative");
  return weighted_spectral_norm(
      spectrum, [](double r, double order) { return 1.0 + std::pow(r, order); }, s);
}

double l2_inner_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "l2_inner_product");
  std::vector<double> terms(a.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = (a[i] * std::conj(b[i])).real();
  return a.grid().frequency_cell_volume() * pairwise_sum(terms);
}

double phase_inner_product(const StateVector& w, const StateVector& z) {
  require_same_grid(w.grid(), z.grid(), "phase_inner_product");
  const auto radii = w.grid().radial_frequencies();
  std::vector<double> terms(w.u.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double weight = 1.0 + radii[i] * radii[i];
    terms[i] = weight * (w.u[i] * std::conj(z.u[i])).real() + (w.v[i] * std::conj(z.v[i])).real();
  }
  return w.grid().frequency_cell_volume() * pairwise_sum(terms);
}

double phase_norm(const StateVector& w) { return std::sqrt(phase_inner_product(w, w)); }

}  // namespace wavelab
