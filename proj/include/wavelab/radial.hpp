#pragma once

#include <functional>
#include <optional>

#include "wavelab/field.hpp"

namespace wavelab {

/// Builds the spectrum coeffs(xi) = profile(|xi|). The zero frequency takes
/// `origin_value` when given, 0 otherwise, so profiles singular at r = 0 are
/// admissible. The result is real and even, hence the transform of a real
/// radial field. Throws std::invalid_argument if the profile yields NaN or
/// infinity at any lattice radius.
SpectralField synthesize_radial_spectrum(const GridSpec& grid,
                                         const std::function<double(double)>& profile,
                                         std::optional<double> origin_value = std::nullopt);

}  // namespace wavelab
