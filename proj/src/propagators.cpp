#include "wavelab/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wavelab/fourier.hpp"
#include "wavelab/sphere_rules.hpp"

namespace wavelab {

StateVector propagate_fourier(const SpectralField& u0_hat, const SpectralField& v0_hat, double t) {
  require_same_grid(u0_hat.grid(), v0_hat.grid(), "propagate_fourier");
  if (!std::isfinite(t)) throw std::invalid_argument("propagate_fourier: non-finite time");
  const auto radii = u0_hat.grid().radial_frequencies();
  std::vector<Complex> u(radii.size());
  std::vector<Complex> v(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double c = std::cos(r * t);
    const double s = std::sin(r * t);
    const double sin_over_r = r == 0.0 ? t : s / r;
    u[i] = c * u0_hat[i] + sin_over_r * v0_hat[i];
    v[i] = -r * s * u0_hat[i] + c * v0_hat[i];
  }
  return {SpectralField(u0_hat.grid(), std::move(u)), SpectralField(u0_hat.grid(), std::move(v))};
}

StateVector propagate_fourier(const StateVector& initial, double t) {
  return propagate_fourier(initial.u, initial.v, t);
}

PropagationRun propagate_fourier_run(const StateVector& initial, double t, double data_radius,
                                     double probe_radius) {
  const double limit = causal_time_limit(initial.grid(), data_radius, probe_radius);
  return {propagate_fourier(initial, t), t, limit, std::abs(t) > limit};
}

StateVector flip_velocity(const StateVector& state) { return {state.u, -1.0 * state.v}; }

StateVector apply_generator(const StateVector& state) { return {state.v, laplacian(state.u)}; }

double propagate_dalembert(const ScalarFunction& u0, const ScalarFunction& v0, double x, double t,
                           const DalembertOptions& options) {
  if (!(t >= 0.0)) throw std::invalid_argument("propagate_dalembert: t must be >= 0");
  const double travelling = 0.5 * (u0(x + t) + u0(x - t));
  if (t == 0.0) return travelling;
  const auto integral =
      integrate(v0, x - t, x + t, options.tolerance, options.v0_breakpoints);
  if (!integral.converged) {
    throw QuadratureError("propagate_dalembert: velocity integral did not converge at x = " +
                              std::to_string(x) + ", t = " + std::to_string(t),
                          integral.error);
  }
  return travelling + 0.5 * integral.value;
}

int next_sphere_order(int order) {
  const auto orders = lebedev_orders();
  for (int candidate : orders) {
    if (candidate >= 2 * order) return candidate;
  }
  if (orders.back() > order) return orders.back();
  return 2 * order + 1;
}

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// (tau / 4pi) int_{S^2} u0(x + tau z) dS_z
double spherical_mean_term(const SphereRule& rule, const Function3& f,
                           const std::array<double, 3>& x, double tau) {
  return tau / kFourPi * rule.integrate([&](double zx, double zy, double zz) {
    return f(x[0] + tau * zx, x[1] + tau * zy, x[2] + tau * zz);
  });
}

double kirchhoff_value(const KirchhoffData& data, const SphereRule& rule,
                       const std::array<double, 3>& x, double t) {
  double value = 0.0;
  if (data.v0) value += spherical_mean_term(rule, data.v0, x, t);
  if (!data.u0) return value;
  if (data.u0_gradient) {
    value += rule.integrate([&](double zx, double zy, double zz) {
      const double px = x[0] + t * zx;
      const double py = x[1] + t * zy;
      const double pz = x[2] + t * zz;
      const auto g = data.u0_gradient(px, py, pz);
      return data.u0(px, py, pz) + t * (g[0] * zx + g[1] * zy + g[2] * zz);
    }) / kFourPi;
    return value;
  }
  // Richardson-extrapolated central difference of the spherical mean term.
  const double h = 1e-4 * t;
  auto central = [&](double step) {
    return (spherical_mean_term(rule, data.u0, x, t + step) -
            spherical_mean_term(rule, data.u0, x, t - step)) /
           (2.0 * step);
  };
  return value + (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace

KirchhoffResult propagate_kirchhoff(const KirchhoffData& data, const std::array<double, 3>& x,
                                    double t, const KirchhoffOptions& options) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("propagate_kirchhoff: t must be positive");
  }
  auto rule = SphereRule::at_least(options.initial_order);
  double previous = kirchhoff_value(data, rule, x, t);
  while (true) {
    const int order = next_sphere_order(rule.order());
    if (order > options.max_order) {
      return {previous, rule.order(), rule.points().size(), false,
              std::numeric_limits<double>::infinity()};
    }
    rule = SphereRule::at_least(order);
    const double current = kirchhoff_value(data, rule, x, t);
    const double change = std::abs(current - previous);
    if (change <= options.rel_tol * std::abs(current)) {
      return {current, rule.order(), rule.points().size(), true, change};
    }
    previous = current;
  }
}

ModalState propagate_eigen(const ModeSystem& modes, std::span<const double> u0_coef,
                           std::span<const double> v0_coef, double t) {
  if (u0_coef.size() != modes.size() || v0_coef.size() != modes.size()) {
    throw std::invalid_argument("propagate_eigen: coefficient count does not match mode count");
  }
  auto state = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double w = std::sqrt(modes.eigenvalue(j));
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    state.u[j] = u0_coef[j] * c + v0_coef[j] * s / w;
    state.v[j] = -w * u0_coef[j] * s + v0_coef[j] * c;
  }
  return state;
}

ModalState propagate_eigen(const ModeSystem& modes, const ModalState& initial, double t) {
  return propagate_eigen(modes, initial.u, initial.v, t);
}

double CausalWindow::limit(const Probe& probe) const {
  double reach = 0.0;
  for (double xi : probe.x) reach = std::max(reach, std::abs(xi));
  return 0.5 * box_length - data_radius - reach;
}

ExperimentReport reconcile(const Representation& a, const Representation& b,
                           std::span<const Probe> probes, const ReconcileOptions& options) {
  const std::size_t dims = probes.empty() ? 0 : probes.front().x.size();
  std::vector<std::string> columns;
  for (std::size_t d = 0; d < dims; ++d) columns.push_back("x" + std::to_string(d));
  for (const char* name : {"t", "value_A", "value_B", "abs_err", "rel_err", "causal_flag"}) {
    columns.emplace_back(name);
  }
  ExperimentReport report("reconcile", columns);
  double max_abs = 0.0;
  double max_rel = 0.0;
  double outside = 0.0;
  for (const auto& probe : probes) {
    if (probe.x.size() != dims) throw std::invalid_argument("reconcile: mixed probe dimensions");
    const double va = a(probe.x, probe.t);
    const double vb = b(probe.x, probe.t);
    const double abs_err = std::abs(va - vb);
    const double denom = std::max(std::abs(vb), options.relative_floor);
    const double rel_err = abs_err == 0.0 ? 0.0 : abs_err / denom;
    const bool beyond = options.window && probe.t > options.window->limit(probe);
    std::vector<double> row(probe.x.begin(), probe.x.end());
    row.insert(row.end(), {probe.t, va, vb, abs_err, rel_err, beyond ? 1.0 : 0.0});
    report.add_row(std::move(row));
    if (beyond) {
      outside += 1.0;
    } else {
      max_abs = std::max(max_abs, abs_err);
      max_rel = std::max(max_rel, rel_err);
    }
  }
  report.set_summary("max_abs_err", max_abs);
  report.set_summary("max_rel_err", max_rel);
  report.set_summary("outside_count", outside);
  return report;
}

}  // namespace wavelab
