#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wavelab/energy.hpp"
#include "wavelab/field.hpp"
#include "wavelab/propagators.hpp"
#include "wavelab/report.hpp"

namespace wavelab {

// ---------------------------------------------------------------------------
// Indicator transforms and averaging symbols
// ---------------------------------------------------------------------------

/// Volume of the unit ball in R^n, n = 1, 2, 3 (see unit_sphere_area for
/// its boundary).
double ball_volume(int dims);

/// Transform of the unit-ball indicator, (2 pi)^{-n/2} int_B e^{-i xi.x} dx,
/// as a function of r = |xi|: r^{-n/2} J_{n/2}(r). Finite at r = 0 with value
/// (2 pi)^{-n/2} |B|.
double chi_ball_hat(int dims, double r);

/// Transform of the cube indicator [-1, 1]^n:
/// 2^n (2 pi)^{-n/2} prod_j sin(xi_j)/xi_j.
double chi_cube_hat(std::span<const double> xi);

/// Symbol of the unnormalized ball average N_1, i.e. (2 pi)^{n/2} chi_B^(r);
/// N_t has symbol ball_multiplier(n, t |xi|).
double ball_multiplier(int dims, double r);

/// Symbol of the unnormalized spherical mean M_1: 2 cos r, 2 pi J0(r) and
/// 4 pi sin r / r for n = 1, 2, 3; M_t has symbol sphere_multiplier(n, t |xi|).
double sphere_multiplier(int dims, double r);

// ---------------------------------------------------------------------------
// Averaging operators (multiplier path)
// ---------------------------------------------------------------------------

/// N_t f = int_B f(x + t z) dz. Throws std::invalid_argument for t <= 0.
SpectralField ball_average(const SpectralField& f, double t);

/// M_t f = int_{S^{n-1}} f(x + t z) dS_z. Throws for t <= 0.
SpectralField sphere_average(const SpectralField& f, double t);

/// Averages with unit total weight (N_t / |B| and M_t / |S^{n-1}|).
SpectralField normalized_ball_average(const SpectralField& f, double t);
SpectralField normalized_sphere_average(const SpectralField& f, double t);

// ---------------------------------------------------------------------------
// Averaging operators (quadrature path, n = 3)
// ---------------------------------------------------------------------------

/// int_{S^2} f(x + t z) dS_z with a sphere rule of at least the given order.
double sphere_average_at(const Function3& f, const std::array<double, 3>& x, double t,
                         int order = 35);

/// int_B f(x + t z) dz by Gauss-Legendre in the radius times a sphere rule.
double ball_average_at(const Function3& f, const std::array<double, 3>& x, double t,
                       int radial_nodes = 32, int order = 35);

// ---------------------------------------------------------------------------
// Smoothing
// ---------------------------------------------------------------------------

/// hs_norm(N_t f, s) / ||f||_2; s defaults to (n+1)/2. Throws for ||f|| = 0.
double smoothing_ratio(const SpectralField& f, double t, double s);
double smoothing_ratio(const SpectralField& f, double t);

/// sup_r (1 + r^s) |ball_multiplier(n, t r)|: the operator norm of N_t from
/// L2 to H^s on the whole space. Sampled in rho = t r on [0, rho_max] with
/// the given step.
double smoothing_operator_norm(int dims, double t, double s, double rho_max = 400.0,
                               double step = 1e-3);

/// Random band-limited test fields: each has i.i.d. Gaussian coefficients on
/// the lattice shell lo <= |xi| <= lo + width (symmetrized so the field is
/// real), with lo and width drawn uniformly from the given ranges, and is
/// scaled to unit L2 norm.
struct CorpusSpec {
  std::size_t count = 50;
  std::uint64_t seed = 1;
  std::array<double, 2> low_band = {0.0, 4.0};
  std::array<double, 2> band_width = {0.5, 3.0};
};

std::vector<SpectralField> band_limited_corpus(const GridSpec& grid, const CorpusSpec& spec);

/// Ratio law over a corpus: rows (field, t, ratio, bound, ratio_over_bound)
/// with bound = C max(1, t^{-s}), C the largest corpus ratio at t = 1 (so 1
/// must be among the times). Summary: c_hat, max_ratio_over_bound, and
/// operator_norm_slope, the log-log slope of smoothing_operator_norm over the
/// times below 1 (NaN if fewer than two).
ExperimentReport smoothing_experiment(std::span<const SpectralField> corpus,
                                      std::span<const double> times, int jobs = 1);

/// Ratios ||N_t f||, ||d_0 N_t f||, ||Laplacian N_t f|| and ||d_0 M_t f||
/// over ||f|| for each t, plus the gradient consistency margin
/// ||xi| N_t^ f| - ||d_0 N_t f|| (nonnegative) and the residual of
/// (g, Laplacian g) = -||grad g||^2 for g = N_t f. Summary slopes (over
/// t <= 1) are fitted both to the per-field ratios and to the whole-space
/// operator norms sup_r r^k |ball_multiplier(n, t r)|, k = 0, 1, 2.
ExperimentReport derivative_estimates_check(const SpectralField& f, std::span<const double> times);

/// sup_r r^k |ball_multiplier(n, t r)| sampled as in smoothing_operator_norm.
double ball_derivative_operator_norm(int dims, double t, int k, double rho_max = 400.0,
                                     double step = 1e-3);

// ---------------------------------------------------------------------------
// Kirchhoff identity and the ball/cube contrast
// ---------------------------------------------------------------------------

struct KirchhoffIdentityResult {
  double max_multiplier_residual;  ///< over the lattice of the spectrum's grid
  double field_residual;           ///< relative L2 residual on the given spectrum
};

/// With u0 = 0, u_t = u/t + (t^2/4pi) Laplacian N_t v0 in R^3. Compares the
/// symbols cos(|xi| t) and sinc(|xi| t) - (t^2/4pi) |xi|^2 ball_multiplier(3, t|xi|).
/// Requires a three-dimensional grid; throws for t <= 0.
KirchhoffIdentityResult kirchhoff_identity_check(const SpectralField& v0_hat, double t);

/// sup over r in [0, r_max] (uniform samples of the given step) of
/// (1 + r)^s |chi_B^(r)|, with the r at which it is attained.
struct WeightedSup {
  double value;
  double argmax;
};
WeightedSup ball_weighted_sup(int dims, double s, double r_max, double step = 1e-2);

/// The same along a coordinate axis for the cube transform.
WeightedSup cube_axis_weighted_sup(int dims, double s, double r_max, double step = 1e-2);

}  // namespace wavelab
