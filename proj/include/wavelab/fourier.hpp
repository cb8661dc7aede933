#pragma once

#include <functional>
#include <span>

#include "wavelab/field.hpp"

namespace wavelab {

/// Unitary surrogate of the continuous transform:
///   F(xi_k) = dx^n (2 pi)^{-n/2} sum_x f(x) exp(-i xi_k . x),
/// so that ||f||_2 = ||F||_2 with ||F||_2^2 = (2 pi / L)^n sum |F|^2.
SpectralField forward_transform(const RealField& field);

/// Exact inverse of forward_transform. Only the real part is kept, so the
/// round trip is exact for conjugate-symmetric input.
RealField inverse_transform(const SpectralField& spectrum);

/// Trigonometric interpolant of the spectrum evaluated at an arbitrary point.
/// The Nyquist term enters as a cosine so real data stay real.
double evaluate_at(const SpectralField& spectrum, std::span<const double> point);

/// Multiplies every coefficient by m(|xi|).
SpectralField apply_radial_multiplier(const SpectralField& spectrum,
                                      const std::function<double(double)>& multiplier);

/// Spectral d/dx_axis. The Nyquist mode of that axis is dropped so real
/// fields stay real.
SpectralField derivative(const SpectralField& spectrum, int axis);

/// Spectral Laplacian, multiplier -|xi|^2.
SpectralField laplacian(const SpectralField& spectrum);

/// Fraction of L2 mass sitting in the outer quarter of the lattice band
/// (any axis index beyond 3N/8 in magnitude). A large value means the data
/// are under-resolved or discontinuous and spectral results carry Gibbs
/// oscillations.
double spectral_tail_fraction(const SpectralField& spectrum);

}  // namespace wavelab
