#include "wavelab/exhaustion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fftw_plan.hpp"
#include "wavelab/energy.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/parallel.hpp"
#include "wavelab/propagators.hpp"

namespace wavelab {

using std::numbers::pi;

namespace {

int checked_intervals(double half_width, double spacing) {
  const double m = 2.0 * half_width / spacing;
  const double rounded = std::round(m);
  if (!(half_width > 0.0) || std::abs(m - rounded) > 1e-9 * std::max(1.0, m) || rounded < 2.0) {
    throw std::invalid_argument("box (-j, j): 2j must be a multiple (>= 2) of the node spacing");
  }
  return static_cast<int>(rounded);
}

std::size_t int_pow(int base, int dims) {
  std::size_t out = 1;
  for (int d = 0; d < dims; ++d) out *= static_cast<std::size_t>(base);
  return out;
}

// Index of the host node sitting at x = -j, i.e. (L/2 - j)/dx.
int host_offset(const GridSpec& host, double half_width) {
  const double dx = host.spacing();
  const double raw = (0.5 * host.box_length() - half_width) / dx;
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) > 1e-9 * std::max(1.0, raw) || rounded < 1.0) {
    throw std::invalid_argument("box (-j, j) is not aligned with the host grid or does not fit");
  }
  return static_cast<int>(rounded);
}

// Sine transform (RODFT00) along every axis of a cube of side `side`.
void sine_transform(std::vector<double>& data, int dims, int side) {
  std::vector<int> shape(static_cast<std::size_t>(dims), side);
  std::vector<fftw_r2r_kind> kinds(static_cast<std::size_t>(dims), FFTW_RODFT00);
  detail::real_r2r(data, shape, kinds);
}

// d/dx_axis of sum_k c_k phi_k at the nodes m_axis = 0..M (boundary
// included) and interior nodes on the other axes.
std::vector<double> modal_gradient(int dims, double half_width, int intervals, int axis,
                                   const std::vector<double>& coefficients) {
  const double a = 2.0 * half_width;
  const int inner = intervals - 1;
  std::vector<int> shape(static_cast<std::size_t>(dims), inner);
  shape[static_cast<std::size_t>(axis)] = intervals + 1;
  std::vector<fftw_r2r_kind> kinds(static_cast<std::size_t>(dims), FFTW_RODFT00);
  kinds[static_cast<std::size_t>(axis)] = FFTW_REDFT00;

  std::size_t total = 1;
  for (int s : shape) total *= static_cast<std::size_t>(s);
  std::vector<double> data(total, 0.0);
  // Scatter c_k * (k_axis pi / a) to position k_axis along `axis`
  // (k_axis - 1 along the sine axes); k_axis = 0 and M stay zero.
  std::vector<int> k(static_cast<std::size_t>(dims));
  for (std::size_t mode = 0; mode < coefficients.size(); ++mode) {
    std::size_t rest = mode;
    for (int d = dims - 1; d >= 0; --d) {
      k[d] = static_cast<int>(rest % inner) + 1;
      rest /= inner;
    }
    std::size_t flat = 0;
    for (int d = 0; d < dims; ++d) {
      const int pos = d == axis ? k[d] : k[d] - 1;
      flat = flat * static_cast<std::size_t>(shape[d]) + static_cast<std::size_t>(pos);
    }
    data[flat] = coefficients[mode] * k[axis] * pi / a;
  }
  detail::real_r2r(data, shape, kinds);
  const double scale = std::pow(0.5 * std::sqrt(2.0 / a), dims);
  for (double& x : data) x *= scale;
  return data;
}

}  // namespace

int BoxSamples::interior_points() const { return checked_intervals(half_width, spacing) - 1; }

RealField extend_by_zero(const BoxSamples& local, const GridSpec& target) {
  if (local.dims != target.dims() || std::abs(local.spacing - target.spacing()) > 1e-12 * target.spacing()) {
    throw std::invalid_argument("extend_by_zero: box samples do not match the target grid");
  }
  const int inner = local.interior_points();
  if (local.values.size() != int_pow(inner, local.dims)) {
    throw std::invalid_argument("extend_by_zero: wrong number of box samples");
  }
  const int offset = host_offset(target, local.half_width);
  if (offset + inner + 1 > target.points()) {
    throw std::invalid_argument("extend_by_zero: box does not fit in the target grid");
  }
  std::vector<double> out(target.size(), 0.0);
  for (std::size_t i = 0; i < local.values.size(); ++i) {
    std::size_t rest = i;
    std::array<int, 3> host{0, 0, 0};
    for (int d = local.dims - 1; d >= 0; --d) {
      host[d] = offset + 1 + static_cast<int>(rest % inner);
      rest /= inner;
    }
    out[target.flatten(host)] = local.values[i];
  }
  return RealField(target, std::move(out));
}

RealField extend_by_zero(const ModeSystem& modes, const std::vector<double>& coefficients,
                         const GridSpec& target) {
  if (modes.dims() != target.dims()) throw std::invalid_argument("extend_by_zero: dimension mismatch");
  if (coefficients.size() != modes.size()) {
    throw std::invalid_argument("extend_by_zero: one coefficient per mode required");
  }
  return RealField::sample(target, [&](std::span<const double> x) {
    double value = 0.0;
    for (std::size_t j = 0; j < modes.size(); ++j) {
      if (coefficients[j] != 0.0) value += coefficients[j] * modes.eigenfunction(j, x);
    }
    return value;
  });
}

std::vector<double> project_onto_modes(const BoxSamples& local) {
  const int inner = local.interior_points();
  if (local.values.size() != int_pow(inner, local.dims)) {
    throw std::invalid_argument("project_onto_modes: wrong number of box samples");
  }
  auto data = local.values;
  sine_transform(data, local.dims, inner);
  const double a = 2.0 * local.half_width;
  const double scale = std::pow(0.5 * local.spacing * std::sqrt(2.0 / a), local.dims);
  for (double& x : data) x *= scale;
  return data;
}

BoxSamples synthesize_from_modes(int dims, double half_width, double spacing,
                                 const std::vector<double>& coefficients) {
  BoxSamples out{dims, half_width, spacing, coefficients};
  const int inner = out.interior_points();
  if (coefficients.size() != int_pow(inner, dims)) {
    throw std::invalid_argument("synthesize_from_modes: wrong number of coefficients");
  }
  sine_transform(out.values, dims, inner);
  const double scale = std::pow(0.5 * std::sqrt(2.0 / (2.0 * half_width)), dims);
  for (double& x : out.values) x *= scale;
  return out;
}

ModeSystem box_mode_system(int dims, double half_width, double spacing) {
  const int inner = checked_intervals(half_width, spacing) - 1;
  const auto n = static_cast<std::size_t>(dims);
  return ModeSystem::box(std::vector<double>(n, 2.0 * half_width), std::vector<int>(n, inner),
                         std::vector<double>(n, -half_width));
}

// ---------------------------------------------------------------------------

ExhaustionConfig default_exhaustion_config(int dims) {
  ExhaustionConfig config;
  config.dims = dims;
  if (dims == 1) {
    config.points = 2048;
    config.sigma = 0.115;
  } else if (dims == 2) {
    config.points = 512;
    config.sigma = 0.3;
  } else {
    throw std::invalid_argument("default_exhaustion_config: dims must be 1 or 2");
  }
  return config;
}

double effective_data_radius(double sigma) {
  // exp(-r^2 / (2 sigma^2)) = 1e-16
  return sigma * std::sqrt(2.0 * std::log(1e16));
}

namespace {

struct BoxRun {
  double half_width;
  int intervals;
  int offset;
  ModeSystem modes;
  ModalState initial;
};

struct ReferenceFields {
  RealField u;
  RealField v;
  std::vector<RealField> grad;
};

ReferenceFields reference_at(const StateVector& initial, double t) {
  const auto state = propagate_fourier(initial, t);
  ReferenceFields ref{inverse_transform(state.u), inverse_transform(state.v), {}};
  for (int d = 0; d < initial.grid().dims(); ++d) {
    ref.grad.push_back(inverse_transform(derivative(state.u, d)));
  }
  return ref;
}

struct CellError {
  double h1;
  double l2;
};

CellError cell_error(const GridSpec& host, const BoxRun& box, const ModalState& state,
                     const ReferenceFields& ref) {
  const int n = host.dims();
  const int m = box.intervals;
  const int inner = m - 1;
  const double dx = host.spacing();
  const auto u_box = synthesize_from_modes(n, box.half_width, dx, state.u);
  const auto v_box = synthesize_from_modes(n, box.half_width, dx, state.v);
  std::vector<std::vector<double>> grad_box;
  for (int d = 0; d < n; ++d) grad_box.push_back(modal_gradient(n, box.half_width, m, d, state.u));

  std::vector<double> u_terms(host.size()), g_terms(host.size()), v_terms(host.size());
  for (std::size_t flat = 0; flat < host.size(); ++flat) {
    const auto idx = host.unflatten(flat);
    bool outside = false;
    bool on_boundary = false;
    double inside_weight = 1.0;
    std::array<int, 3> local{0, 0, 0};
    for (int d = 0; d < n; ++d) {
      local[d] = idx[d] - box.offset;
      if (local[d] < 0 || local[d] > m) outside = true;
      else if (local[d] == 0 || local[d] == m) {
        on_boundary = true;
        inside_weight *= 0.5;
      }
    }
    double du = ref.u[flat];
    double dv = ref.v[flat];
    double grad_in = 0.0;
    double grad_out = 0.0;
    for (int d = 0; d < n; ++d) grad_out += ref.grad[d][flat] * ref.grad[d][flat];
    if (outside) {
      inside_weight = 0.0;
    } else {
      if (!on_boundary) {
        std::size_t pos = 0;
        for (int d = 0; d < n; ++d) pos = pos * inner + static_cast<std::size_t>(local[d] - 1);
        du -= u_box.values[pos];
        dv -= v_box.values[pos];
      }
      for (int d = 0; d < n; ++d) {
        // Gradient component d lives on nodes 0..M along d and interior
        // nodes elsewhere; it vanishes on the other axes' boundary faces.
        double g = 0.0;
        bool interior_elsewhere = true;
        std::size_t pos = 0;
        for (int e = 0; e < n; ++e) {
          if (e == d) {
            pos = pos * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(local[e]);
          } else {
            if (local[e] == 0 || local[e] == m) interior_elsewhere = false;
            pos = pos * static_cast<std::size_t>(inner) + static_cast<std::size_t>(std::max(0, local[e] - 1));
          }
        }
        if (interior_elsewhere) g = grad_box[d][pos];
        const double diff = ref.grad[d][flat] - g;
        grad_in += diff * diff;
      }
    }
    u_terms[flat] = du * du;
    v_terms[flat] = dv * dv;
    g_terms[flat] = inside_weight * grad_in + (1.0 - inside_weight) * grad_out;
  }
  const double cell = host.cell_volume();
  return {std::sqrt(cell * (pairwise_sum(u_terms) + pairwise_sum(g_terms))),
          std::sqrt(cell * pairwise_sum(v_terms))};
}

BoxSamples restrict_to_box(const RealField& field, double half_width, int intervals, int offset) {
  const auto& grid = field.grid();
  const int n = grid.dims();
  const int inner = intervals - 1;
  BoxSamples out{n, half_width, grid.spacing(), std::vector<double>(int_pow(inner, n))};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    std::size_t rest = i;
    std::array<int, 3> host{0, 0, 0};
    for (int d = n - 1; d >= 0; --d) {
      host[d] = offset + 1 + static_cast<int>(rest % inner);
      rest /= inner;
    }
    out.values[i] = field[grid.flatten(host)];
  }
  return out;
}

}  // namespace

ExhaustionOutcome exhaustion_experiment(const ExhaustionConfig& config) {
  if (config.dims != 1 && config.dims != 2) {
    throw std::invalid_argument("exhaustion_experiment: only intervals (n = 1) and boxes (n = 2)");
  }
  if (config.domains.empty()) throw std::invalid_argument("exhaustion_experiment: no domains");
  const auto host = make_grid(config.dims, config.box_length, config.points);
  const double r0 = effective_data_radius(config.sigma);

  std::vector<double> times = config.times;
  if (times.empty()) {
    for (int i = 0; i <= 40; ++i) times.push_back(0.25 * i);
  }
  const double t_max = *std::max_element(times.begin(), times.end());
  if (t_max > causal_time_limit(host, r0, 0.0)) {
    throw std::invalid_argument("exhaustion_experiment: times exceed the reference causal window");
  }

  auto domains = config.domains;
  std::sort(domains.begin(), domains.end());
  const double sigma = config.sigma;
  const auto u0 = RealField::sample(host, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (int d = 0; d < config.dims; ++d) r2 += x[d] * x[d];
    return std::exp(-r2 / (2.0 * sigma * sigma));
  });
  std::vector<double> v0_samples(u0.samples().begin(), u0.samples().end());
  for (double& x : v0_samples) x *= config.velocity_amplitude;
  const RealField v0(host, std::move(v0_samples));
  const StateVector initial(forward_transform(u0), forward_transform(v0));

  std::vector<BoxRun> boxes;
  for (double j : domains) {
    if (!(j > r0)) throw std::invalid_argument("exhaustion_experiment: domain must contain the data support");
    const int m = checked_intervals(j, host.spacing());
    const int offset = host_offset(host, j);
    auto modes = box_mode_system(config.dims, j, host.spacing());
    ModalState start{project_onto_modes(restrict_to_box(u0, j, m, offset)),
                     project_onto_modes(restrict_to_box(v0, j, m, offset))};
    boxes.push_back({j, m, offset, std::move(modes), std::move(start)});
  }

  // errors[t][box]
  std::vector<std::vector<CellError>> errors(times.size());
  std::vector<std::vector<double>> energies(times.size());
  parallel_for(times.size(), config.jobs, [&](std::size_t i) {
    const auto ref = reference_at(initial, times[i]);
    for (const auto& box : boxes) {
      const auto state = propagate_eigen(box.modes, box.initial, times[i]);
      errors[i].push_back(cell_error(host, box, state, ref));
      energies[i].push_back(energy(box.modes, state));
    }
  });

  ExhaustionOutcome outcome{
      ExperimentReport("exhaustion", {"j", "t", "e_H1", "e_L2", "e_total", "causal_flag"}),
      {}, r0, true, true, true, true, 0.0};
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const double j = boxes[b].half_width;
    const double e0 = energy(boxes[b].modes, boxes[b].initial);
    DomainSummary summary{j, boxes[b].modes.size(), 0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < times.size(); ++i) {
      const auto& e = errors[i][b];
      const double total = e.h1 + e.l2;
      const bool causal = times[i] < j - r0;
      outcome.report.add_row({j, times[i], e.h1, e.l2, total, causal ? 1.0 : 0.0});
      if (times[i] == 0.0) summary.projection_error = total;
      summary.max_error = std::max(summary.max_error, total);
      if (causal) summary.max_causal_error = std::max(summary.max_causal_error, total);
      summary.energy_drift = std::max(summary.energy_drift, std::abs(energies[i][b] - e0) / e0);
    }
    outcome.causal_ok = outcome.causal_ok && summary.max_causal_error <= config.causal_tolerance;
    outcome.projection_ok = outcome.projection_ok && summary.projection_error <= config.projection_tolerance;
    outcome.energy_ok = outcome.energy_ok && summary.energy_drift <= config.energy_tolerance;
    outcome.domains.push_back(summary);
  }
  // Errors below the causal tolerance count as zero, so round-off in two
  // untouched domains cannot break the ordering.
  for (std::size_t b = 1; b < outcome.domains.size(); ++b) {
    const double prev = outcome.domains[b - 1].max_error;
    const double cur = outcome.domains[b].max_error;
    if (cur > config.causal_tolerance && cur > prev * (1.0 + config.monotone_slack)) {
      outcome.monotone_ok = false;
    }
  }

  if (config.dims == 1) {
    const ScalarFunction f0 = [&](double x) { return std::exp(-x * x / (2.0 * sigma * sigma)); };
    const ScalarFunction f1 = [&](double x) { return config.velocity_amplitude * f0(x); };
    DalembertOptions options;
    options.tolerance = 1e-12;
    options.v0_breakpoints = {0.0};
    for (double t : {1.0, 3.0, 6.0}) {
      if (t > t_max) continue;
      const auto state = propagate_fourier(initial, t);
      for (double x : {-6.0, -3.0, -0.5, 0.0, 2.0, 5.0}) {
        const double p[1] = {x};
        const double diff = std::abs(evaluate_at(state.u, p) - propagate_dalembert(f0, f1, x, t, options));
        outcome.reference_check = std::max(outcome.reference_check, diff);
      }
    }
  }

  for (const auto& d : outcome.domains) {
    const std::string tag = "j=" + format_number(d.half_width);
    outcome.report.set_summary(tag + " modes", static_cast<double>(d.modes));
    outcome.report.set_summary(tag + " projection_error", d.projection_error);
    outcome.report.set_summary(tag + " max_error", d.max_error);
    outcome.report.set_summary(tag + " max_causal_error", d.max_causal_error);
    outcome.report.set_summary(tag + " energy_drift", d.energy_drift);
  }
  outcome.report.set_summary("data_radius", r0);
  outcome.report.set_summary("causal_ok", outcome.causal_ok);
  outcome.report.set_summary("monotone_ok", outcome.monotone_ok);
  outcome.report.set_summary("projection_ok", outcome.projection_ok);
  outcome.report.set_summary("energy_ok", outcome.energy_ok);
  outcome.report.set_summary("reference_check", outcome.reference_check);
  return outcome;
}

}  // namespace wavelab
