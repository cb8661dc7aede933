#pragma once

#include <span>

#include "wavelab/field.hpp"

namespace wavelab {

/// Sum by a fixed pairwise tree (blocks of 8 summed serially at the leaves).
/// The result depends only on the input order, never on thread count.
double pairwise_sum(std::span<const double> values);

/// ||f||_2 = sqrt(dx^n sum f^2).
double l2_norm(const RealField& field);
/// ||F||_2 = sqrt((2 pi / L)^n sum |F|^2).
double l2_norm(const SpectralField& spectrum);

/// ||grad u||_2 computed spectrally as || |xi| F ||_2.
double h1_seminorm(const SpectralField& spectrum);
double h1_seminorm(const RealField& field);

/// || (1 + |xi|^s) F ||_2. Throws std::invalid_argument for s < 0.
double hs_norm(const SpectralField& spectrum, double s);

/// L2 inner product of two (real) fields computed from their spectra.
double l2_inner_product(const SpectralField& a, const SpectralField& b);

/// Phase-space inner product  int (u p + grad u . grad p + v q) dx.
double phase_inner_product(const StateVector& w, const StateVector& z);

/// Norm induced by phase_inner_product.
double phase_norm(const StateVector& w);

}  // namespace wavelab
