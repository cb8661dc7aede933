#include "wavelab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavelab {

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

RealField::RealField(GridSpec grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("RealField: sample count does not match grid");
  }
  if (!std::all_of(samples_.begin(), samples_.end(), [](double x) { return std::isfinite(x); })) {
    throw std::invalid_argument("RealField: non-finite sample");
  }
}

RealField RealField::sample(const GridSpec& grid, const PointFunction& f) {
  std::vector<double> values(grid.size());
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const auto index = grid.unflatten(flat);
    for (int d = 0; d < grid.dims(); ++d) x[d] = grid.coordinate(index[d]);
    values[flat] = f(std::span<const double>(x.data(), grid.dims()));
  }
  return RealField(grid, std::move(values));
}

RealField RealField::zeros(const GridSpec& grid) {
  return RealField(grid, std::vector<double>(grid.size(), 0.0));
}

SpectralField::SpectralField(GridSpec grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size()) {
    throw std::invalid_argument("SpectralField: coefficient count does not match grid");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("SpectralField: non-finite coefficient");
    }
  }
}

SpectralField SpectralField::zeros(const GridSpec& grid) {
  return SpectralField(grid, std::vector<Complex>(grid.size(), Complex{}));
}

StateVector::StateVector(SpectralField u_hat, SpectralField v_hat)
    : u(std::move(u_hat)), v(std::move(v_hat)) {
  require_same_grid(u.grid(), v.grid(), "StateVector");
}

std::size_t mirror_index(const GridSpec& grid, std::size_t flat) {
  auto index = grid.unflatten(flat);
  const int n = grid.points();
  for (int d = 0; d < grid.dims(); ++d) index[d] = (n - index[d]) % n;
  return grid.flatten(index);
}

bool is_conjugate_symmetric(const SpectralField& field, double rel_tol) {
  double scale = 0.0;
  for (const auto& c : field.coeffs()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const auto& a = field[i];
    const auto& b = field[mirror_index(field.grid(), i)];
    if (std::abs(a - std::conj(b)) > rel_tol * scale) return false;
  }
  return true;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "SpectralField +");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return SpectralField(a.grid(), std::move(out));
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "SpectralField -");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return SpectralField(a.grid(), std::move(out));
}

SpectralField operator*(double scale, const SpectralField& a) {
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * a[i];
  return SpectralField(a.grid(), std::move(out));
}

}  // namespace wavelab
