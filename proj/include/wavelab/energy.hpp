#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/modes.hpp"
#include "wavelab/report.hpp"

namespace wavelab {

// ---------------------------------------------------------------------------
// Energy
// ---------------------------------------------------------------------------

/// E = (||grad u||^2 + ||v||^2) / 2 with the gradient taken spectrally.
double energy(const StateVector& w);

/// E = sum_j (lambda_j u_j^2 + v_j^2) / 2.
double energy(const ModeSystem& modes, const ModalState& w);

/// Largest |E(t) - E(0)| / E(0) over the given times (0 when E(0) = 0).
double energy_drift(const StateVector& initial, std::span<const double> times);
double energy_drift(const ModeSystem& modes, const ModalState& initial,
                    std::span<const double> times);

/// ||u0||^2 + 2 t (u0, v0) + 2 E t^2, an upper bound for ||u(t)||^2.
double growth_bound(const StateVector& initial, double t);

/// d/dt (u_t, u) at time t by a central difference with the given step,
/// compared with ||u_t||^2 - ||grad u||^2. The discrepancy is returned
/// relative to 2E (which bounds both sides).
struct GrowthIdentityCheck {
  double finite_difference;
  double spectral;
  double relative_error;
};
GrowthIdentityCheck growth_identity_check(const StateVector& initial, double t,
                                          double step = 1e-4);

// ---------------------------------------------------------------------------
// Growth series
// ---------------------------------------------------------------------------

/// A trajectory of ||u(t)||_2 (or a derived quantity) on increasing times.
struct GrowthSeries {
  std::vector<double> times;
  std::vector<double> values;
  /// Optional comparison bound per time; empty when not applicable.
  std::vector<double> bounds;
  std::string example;
  std::vector<std::pair<std::string, double>> parameters;
  std::string provenance;

  /// Throws std::invalid_argument unless times increase strictly, values are
  /// finite and nonnegative, and bounds (if any) match in length.
  void validate() const;

  /// Columns t, value, bound, ratio (bound and ratio NaN when absent).
  ExperimentReport to_report() const;
};

struct ExponentFit {
  double slope;
  double intercept;
  double r_squared;
  std::size_t points;
  bool flagged;  ///< r^2 < 0.99
};

/// Least squares of log(value) on log(t) over times in [window.first,
/// window.second]. The default window spans two decades ending at the largest
/// time. Nonpositive values inside the window are rejected.
ExponentFit fit_growth_exponent(const GrowthSeries& series,
                                std::optional<std::pair<double, double>> window = std::nullopt);

// ---------------------------------------------------------------------------
// Sub-quadratic growth
// ---------------------------------------------------------------------------

/// t^{-1} ||u(t)||_2 for u0 = 0 and the given velocity spectrum, using the
/// lattice sum of |v0^|^2 sin^2(|xi| t)/|xi|^2 (t^2 at xi = 0).
GrowthSeries subquadratic_check(const SpectralField& v0_hat, std::span<const double> times,
                                int jobs = 1);

/// A radial velocity spectrum v0^(xi) = profile(|xi|) supported in
/// |xi| <= cutoff, in dims = 1, 2 or 3.
struct RadialSpectrum {
  int dims = 3;
  std::function<double(double)> profile;
  double cutoff = 1.0;
  /// True when profile(r) is unbounded as r -> 0 (switches the innermost
  /// panel to a tanh-sinh rule).
  bool singular_at_origin = false;
};

/// Surface area of the unit sphere in R^n: 2, 2 pi, 4 pi.
double unit_sphere_area(int dims);

/// ||v0||_2 for a radial spectrum, by radial quadrature.
double radial_l2_norm(const RadialSpectrum& spectrum, double rel_tol = 1e-10);

/// ||u(t)||_2 for u0 = 0, by radial quadrature of
/// omega_n int_0^cutoff r^{n-3} profile(r)^2 sin^2(r t) dr.
double radial_solution_norm(const RadialSpectrum& spectrum, double t, double rel_tol = 1e-10);

/// t^{-1} ||u(t)||_2 on a radial spectrum (no grid involved).
GrowthSeries subquadratic_check(const RadialSpectrum& spectrum, std::span<const double> times,
                                int jobs = 1);

/// sup_t ||u(t)||_2 / (gap^{-1} ||v0||_2) on the lattice, for u0 = 0 and a
/// spectrum vanishing on |xi| < gap. At most 1 when the gap condition holds.
double gapped_orbit_ratio(const SpectralField& v0_hat, double gap, std::span<const double> times);

// ---------------------------------------------------------------------------
// Explicit growth examples
// ---------------------------------------------------------------------------

/// ||u(t)||_2 in R^3 for u0 = 0, v0^(xi) = |xi|^{eps - 3/2} on |xi| <= 1:
///   t^{1-eps} sqrt(4 pi int_0^t s^{2 eps - 1} (sin s / s)^2 ds).
/// eps must lie in (0, 1/2]; the endpoint 1/2 is admitted for testing.
double radial_growth_example(double eps, double t);

/// The same on many times, sharing the cumulative integral. Times must be
/// nonnegative and increasing.
GrowthSeries radial_growth_series(double eps, std::span<const double> times);

/// The radial spectrum of radial_growth_example.
RadialSpectrum radial_growth_spectrum(double eps);

/// ||u(t)||_2 in R^3 for u0 = 0 and the log-periodically modulated spectrum
/// |v0^(xi)|^2 = |xi|^{2 eps - 3} (1 + amplitude sin(frequency log|xi|)) on
/// |xi| <= 1. Reduces to radial_growth_example for amplitude 0. Used by the
/// exploratory growth experiment; amplitude in [0, 1].
double modulated_growth_norm(double eps, double amplitude, double frequency, double t);

/// Odd velocity v0(x) = sign(x) |x|^{-alpha} for |x| > 1, zero on [-1, 1];
/// alpha in (1, 3/2).
double odd_power_velocity(double alpha, double x);

/// int_{t+1}^inf ((x+t)^{1-alpha} - (x-t)^{1-alpha})^2 / (1-alpha)^2 dx,
/// a lower bound for 4 ||u(t)||_2^2. Requires t >= 1.
double odd_power_lower_bound(double alpha, double t);

/// ||u(t)||_2 for u0 = 0 and the odd-power velocity, with u evaluated by the
/// d'Alembert integral and the norm by an outer quadrature over x.
double odd_power_norm(double alpha, double t);

GrowthSeries odd_power_series(double alpha, std::span<const double> times, int jobs = 1);

}  // namespace wavelab
