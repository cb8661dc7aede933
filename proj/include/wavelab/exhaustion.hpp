#pragma once

#include <cstddef>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/modes.hpp"
#include "wavelab/report.hpp"

namespace wavelab {

/// Samples of a function on the open box (-j, j)^n at the nodes of a host
/// grid: the (M - 1)^n interior nodes, M = 2j / dx, stored row-major.
struct BoxSamples {
  int dims;
  double half_width;
  double spacing;
  std::vector<double> values;

  /// M - 1.
  int interior_points() const;
};

/// Copies the samples into the host grid and sets every other node to zero.
/// The box must be aligned with the host grid (j a multiple of dx, box inside
/// the periodic cell). Throws std::invalid_argument otherwise.
RealField extend_by_zero(const BoxSamples& local, const GridSpec& target);

/// Evaluates a modal expansion sum_k c_k phi_k on the target grid, with zero
/// outside the mode system's box.
RealField extend_by_zero(const ModeSystem& modes, const std::vector<double>& coefficients,
                         const GridSpec& target);

/// Dirichlet sine coefficients of a sampled box function: a trapezoid
/// projection onto every mode the nodes resolve (caps M - 1 per axis),
/// computed with a type-I sine transform.
std::vector<double> project_onto_modes(const BoxSamples& local);

/// Inverse of project_onto_modes: mode coefficients back to node values.
BoxSamples synthesize_from_modes(int dims, double half_width, double spacing,
                                 const std::vector<double>& coefficients);

/// Mode system matching BoxSamples of that shape.
ModeSystem box_mode_system(int dims, double half_width, double spacing);

struct ExhaustionConfig {
  int dims = 1;
  double box_length = 64.0;
  int points = 2048;
  /// Initial data u0 = exp(-|x|^2 / (2 sigma^2)), v0 = velocity_amplitude * u0.
  double sigma = 0.115;
  double velocity_amplitude = 0.5;
  std::vector<double> domains = {3.0, 5.0, 9.0, 17.0};
  std::vector<double> times;  ///< defaults to 0, 0.25, ..., 10 when empty
  double causal_tolerance = 1e-4;
  double monotone_slack = 0.05;
  double projection_tolerance = 1e-6;
  double energy_tolerance = 1e-10;
  int jobs = 1;
};

/// Grids and data used for the desk-scale runs in one and two dimensions.
ExhaustionConfig default_exhaustion_config(int dims);

/// Radius outside which the Gaussian data are below 1e-16 of their peak.
double effective_data_radius(double sigma);

struct DomainSummary {
  double half_width;
  std::size_t modes;
  double projection_error;  ///< ||p_j - p||_H at t = 0
  double max_error;         ///< max over t of e_j(t)
  double max_causal_error;  ///< max of e_j(t) over t < j - r0
  double energy_drift;      ///< relative, over the sampled times
};

struct ExhaustionOutcome {
  ExperimentReport report;  ///< columns j, t, e_H1, e_L2, e_total, causal_flag
  std::vector<DomainSummary> domains;
  double data_radius;
  bool causal_ok;
  bool monotone_ok;
  bool projection_ok;
  bool energy_ok;
  /// Largest |spectral - d'Alembert| over probe points (n = 1 only, else 0).
  double reference_check;
};

/// Solves on each (-j, j)^n by exact modal propagation, extends by zero and
/// compares with the periodic spectral solution in the H^1 x L2 norm:
/// e_j(t) = ||u_j - u||_{H1} + ||v_j - v||_2. causal_flag marks t < j - r0.
/// Throws std::invalid_argument for a domain that is not aligned with the
/// reference grid, does not contain B(0, r0), or a time past the reference
/// grid's causal window.
ExhaustionOutcome exhaustion_experiment(const ExhaustionConfig& config);

}  // namespace wavelab
