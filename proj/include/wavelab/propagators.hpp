#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/modes.hpp"
#include "wavelab/quadrature.hpp"
#include "wavelab/report.hpp"

namespace wavelab {

// ---------------------------------------------------------------------------
// Whole-space propagation on the periodic surrogate
// ---------------------------------------------------------------------------

/// Exact spectral solution of u_tt = Laplacian u:
///   u^(t) = u0^ cos(|xi| t) + v0^ sin(|xi| t)/|xi|,
///   v^(t) = -|xi| u0^ sin(|xi| t) + v0^ cos(|xi| t),
/// with sin(|xi| t)/|xi| = t at xi = 0. Negative t is allowed.
StateVector propagate_fourier(const SpectralField& u0_hat, const SpectralField& v0_hat, double t);
StateVector propagate_fourier(const StateVector& initial, double t);

/// A propagated state together with its causal validity window
/// T_max = L/2 - data_radius - probe_radius.
struct PropagationRun {
  StateVector state;
  double time;
  double causal_limit;
  bool beyond_causal_window;
};

PropagationRun propagate_fourier_run(const StateVector& initial, double t, double data_radius,
                                     double probe_radius);

/// (u0, v0) -> (u0, -v0). Conjugating the forward flow by this flip gives
/// the backward flow.
StateVector flip_velocity(const StateVector& state);

/// Applies A = [[0, 1], [Laplacian, 0]] spectrally.
StateVector apply_generator(const StateVector& state);

// ---------------------------------------------------------------------------
// d'Alembert (n = 1)
// ---------------------------------------------------------------------------

struct DalembertOptions {
  double tolerance = 1e-10;
  /// Points where v0 has jumps or kinks; used to split the quadrature.
  std::vector<double> v0_breakpoints;
};

/// u(x,t) = (u0(x+t) + u0(x-t) + int_{x-t}^{x+t} v0) / 2.
/// Throws QuadratureError when the integral misses the tolerance and
/// std::invalid_argument for t < 0.
double propagate_dalembert(const ScalarFunction& u0, const ScalarFunction& v0, double x, double t,
                           const DalembertOptions& options = {});

// ---------------------------------------------------------------------------
// Kirchhoff (n = 3)
// ---------------------------------------------------------------------------

using Function3 = std::function<double(double, double, double)>;
using Gradient3 = std::function<std::array<double, 3>(double, double, double)>;

/// Initial data for the Kirchhoff path. An empty u0 means u0 = 0. When u0 is
/// given without a gradient, the time derivative is taken by a Richardson-
/// extrapolated central difference with step 1e-4 t.
struct KirchhoffData {
  Function3 u0;
  Gradient3 u0_gradient;
  Function3 v0;
};

struct KirchhoffOptions {
  int initial_order = 17;
  double rel_tol = 1e-8;
  int max_order = 527;
};

struct KirchhoffResult {
  double value;
  int order;           ///< order of the last sphere rule used
  std::size_t nodes;   ///< nodes of that rule
  bool converged;      ///< false when max_order was hit first
  double last_change;  ///< |I_last - I_previous|
};

/// u(x,t) = (t/4pi) int_{S^2} v0(x+tz) dS_z
///        + (1/4pi) int_{S^2} u0(x+tz) dS_z + (t/4pi) int_{S^2} grad u0(x+tz).z dS_z.
/// The sphere rule order doubles until two successive values agree to
/// rel_tol. Throws std::invalid_argument for t <= 0.
KirchhoffResult propagate_kirchhoff(const KirchhoffData& data, const std::array<double, 3>& x,
                                    double t, const KirchhoffOptions& options = {});

/// Next order in the refinement ladder 17 -> 35 -> 71 -> 131 -> 263 -> ...
int next_sphere_order(int order);

// ---------------------------------------------------------------------------
// Dirichlet eigenfunction expansion
// ---------------------------------------------------------------------------

/// Per mode: u_j(t) = u0j cos(w t) + v0j sin(w t)/w, v_j(t) = -w u0j sin(w t) + v0j cos(w t),
/// w = sqrt(lambda_j).
ModalState propagate_eigen(const ModeSystem& modes, std::span<const double> u0_coef,
                           std::span<const double> v0_coef, double t);
ModalState propagate_eigen(const ModeSystem& modes, const ModalState& initial, double t);

// ---------------------------------------------------------------------------
// Cross-representation comparison
// ---------------------------------------------------------------------------

/// A solution representation evaluated pointwise: value of u at (x, t).
using Representation = std::function<double(std::span<const double>, double)>;

struct Probe {
  std::vector<double> x;
  double t;
};

struct CausalWindow {
  double box_length;
  double data_radius;

  /// L/2 - data_radius - max_i |x_i|.
  double limit(const Probe& probe) const;
};

struct ReconcileOptions {
  std::optional<CausalWindow> window;
  /// Denominator floor for rel_err = abs_err / max(|value_B|, floor).
  double relative_floor = 0.0;
};

/// Evaluates both representations at every probe. Columns:
/// x0.., t, value_A, value_B, abs_err, rel_err, causal_flag (1 = outside the
/// causal window). Summary: max_abs_err and max_rel_err over in-window
/// probes, outside_count.
ExperimentReport reconcile(const Representation& a, const Representation& b,
                           std::span<const Probe> probes, const ReconcileOptions& options = {});

}  // namespace wavelab
