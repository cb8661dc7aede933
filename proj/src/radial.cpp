#include "wavelab/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavelab {

SpectralField synthesize_radial_spectrum(const GridSpec& grid,
                                         const std::function<double(double)>& profile,
                                         std::optional<double> origin_value) {
  const auto radii = grid.radial_frequencies();
  std::vector<Complex> coeffs(grid.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double value = radii[i] == 0.0 ? origin_value.value_or(0.0) : profile(radii[i]);
    if (!std::isfinite(value)) {
      throw std::invalid_argument("synthesize_radial_spectrum: profile is not finite at r = " +
                                  std::to_string(radii[i]));
    }
    coeffs[i] = value;
  }
  return SpectralField(grid, std::move(coeffs));
}

}  // namespace wavelab
