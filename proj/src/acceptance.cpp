#include "wavelab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wavelab/averaging.hpp"
#include "wavelab/energy.hpp"
#include "wavelab/exhaustion.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/parallel.hpp"
#include "wavelab/propagators.hpp"
#include "wavelab/radial.hpp"
#include "wavelab/random.hpp"
#include "wavelab/semigroup.hpp"

namespace wavelab {

using std::numbers::pi;

namespace {

// Small builder for the detail text and metric list of a criterion.
class Outcome {
 public:
  void metric(const std::string& key, double value) { metrics_.emplace_back(key, value); }

  /// Records a named check; the criterion passes only if all checks pass.
  void check(const std::string& what, bool ok) {
    if (!ok) {
      passed_ = false;
      failures_.push_back(what);
    }
  }

  void note(const std::string& text) { notes_.push_back(text); }

  CriterionResult finish(int id, std::string name) const {
    std::ostringstream detail;
    bool first = true;
    for (const auto& [k, v] : metrics_) {
      detail << (first ? "" : ", ") << k << "=" << format_short(v);
      first = false;
    }
    for (const auto& n : notes_) detail << "; " << n;
    for (const auto& f : failures_) detail << "; violated: " << f;
    return {id, std::move(name), passed_, detail.str(), 0.0, metrics_};
  }

 private:
  static std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
  }

  bool passed_ = true;
  std::vector<std::pair<std::string, double>> metrics_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string label(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

double max_abs(std::span<const Complex> values) {
  double m = 0.0;
  for (const auto& c : values) m = std::max(m, std::abs(c));
  return m;
}

// max_k |a_k - b_k| / max_k |a_k|
double per_mode_error(const SpectralField& a, const SpectralField& b) {
  double diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
  const double scale = max_abs(a.coeffs());
  return scale > 0.0 ? diff / scale : diff;
}

double per_mode_error(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, std::abs(a[k] - b[k]));
    scale = std::max(scale, std::abs(a[k]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

RealField white_noise(const GridSpec& grid, Rng& rng) {
  std::vector<double> samples(grid.size());
  for (double& x : samples) x = rng.normal();
  return RealField(grid, std::move(samples));
}

ModalState random_modal_state(std::size_t modes, Rng& rng) {
  auto state = ModalState::zeros(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    state.u[j] = rng.normal();
    state.v[j] = rng.normal();
  }
  return state;
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1));
  return out;
}

std::vector<double> logspace(double a, double b, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (count - 1)));
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult plancherel_roundtrip(const AcceptanceOptions& opt) {
  Outcome out;
  Rng rng(opt.seed);
  for (int dims = 1; dims <= 3; ++dims) {
    const auto grid = make_grid(dims, 2.0 * pi, 64);
    std::vector<RealField> fields;
    for (int i = 0; i < 100; ++i) fields.push_back(white_noise(grid, rng));
    std::vector<double> plancherel(fields.size()), roundtrip(fields.size());
    parallel_for(fields.size(), opt.jobs, [&](std::size_t i) {
      const auto spectrum = forward_transform(fields[i]);
      const double norm = l2_norm(fields[i]);
      plancherel[i] = std::abs(norm - l2_norm(spectrum)) / norm;
      const auto back = inverse_transform(spectrum);
      std::vector<double> diff(fields[i].size());
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = back[k] - fields[i][k];
      roundtrip[i] = l2_norm(RealField(grid, std::move(diff))) / norm;
    });
    const double p = *std::max_element(plancherel.begin(), plancherel.end());
    const double r = *std::max_element(roundtrip.begin(), roundtrip.end());
    out.metric("plancherel_n" + std::to_string(dims), p);
    out.metric("roundtrip_n" + std::to_string(dims), r);
    out.check("Plancherel relative error <= 1e-12 (n=" + std::to_string(dims) + ")", p <= 1e-12);
    out.check("round-trip relative error <= 1e-12 (n=" + std::to_string(dims) + ")", r <= 1e-12);
  }
  return out.finish(1, "plancherel_roundtrip");
}

CriterionResult energy_conservation(const AcceptanceOptions& opt) {
  Outcome out;
  const auto times = linspace(0.0, 100.0, 201);
  const auto grid = make_grid(2, 20.0, 64);
  const auto fields = band_limited_corpus(grid, {8, opt.seed, {0.0, 4.0}, {0.5, 3.0}});
  double spectral = 0.0;
  for (std::size_t i = 0; i + 1 < fields.size(); i += 2) {
    spectral = std::max(spectral, energy_drift(StateVector(fields[i], fields[i + 1]), times));
  }
  Rng rng(opt.seed + 1);
  const auto modes = ModeSystem::interval(pi, 200);
  double modal = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    modal = std::max(modal, energy_drift(modes, random_modal_state(modes.size(), rng), times));
  }
  out.metric("spectral_drift", spectral);
  out.metric("modal_drift", modal);
  out.check("spectral energy drift <= 1e-12", spectral <= 1e-12);
  out.check("modal energy drift <= 1e-12", modal <= 1e-12);
  return out.finish(2, "energy_conservation");
}

CriterionResult group_law(const AcceptanceOptions& opt) {
  Outcome out;
  const auto grid = make_grid(2, 20.0, 64);
  const auto fields = band_limited_corpus(grid, {2, opt.seed + 2, {0.0, 4.0}, {1.0, 3.0}});
  const StateVector w(fields[0], fields[1]);
  const double pairs[][2] = {{1.3, 2.9}, {-3.7, 1.3}, {2.9, -3.7}, {-1.3, -2.9}};

  double group = 0.0;
  for (const auto& [s, t] : pairs) {
    const auto direct = propagate_fourier(w, s + t);
    const auto composed = propagate_fourier(propagate_fourier(w, s), t);
    group = std::max({group, per_mode_error(direct.u, composed.u), per_mode_error(direct.v, composed.v)});
  }
  const auto modes = ModeSystem::interval(pi, 200);
  Rng rng(opt.seed + 3);
  const auto modal_start = random_modal_state(modes.size(), rng);
  for (const auto& [s, t] : pairs) {
    const auto direct = propagate_eigen(modes, modal_start, s + t);
    const auto composed = propagate_eigen(modes, propagate_eigen(modes, modal_start, s), t);
    group = std::max({group, per_mode_error(direct.u, composed.u), per_mode_error(direct.v, composed.v)});
  }

  double reversal = 0.0;
  for (double t : {0.8, 4.1, 12.5}) {
    const auto backward = propagate_fourier(w, -t);
    const auto flipped = flip_velocity(propagate_fourier(flip_velocity(w), t));
    reversal = std::max({reversal, per_mode_error(backward.u, flipped.u), per_mode_error(backward.v, flipped.v)});
    const auto undone = propagate_fourier(propagate_fourier(w, t), -t);
    reversal = std::max({reversal, per_mode_error(w.u, undone.u), per_mode_error(w.v, undone.v)});
  }

  // Data (u0, 0) evolve as the time derivative of data (0, u0); more
  // generally T(t)(u0, v0) = T(t)(0, v0) + A T(t)(0, u0).
  const auto zero = SpectralField::zeros(grid);
  double derivative_identity = 0.0;
  for (double t : {0.5, 3.3, 9.0}) {
    const auto from_position = propagate_fourier(w.u, zero, t);
    const auto from_velocity = propagate_fourier(zero, w.u, t);
    derivative_identity = std::max(derivative_identity, per_mode_error(from_position.u, from_velocity.v));
    const auto full = propagate_fourier(w, t);
    const auto lifted = apply_generator(propagate_fourier(zero, w.u, t));
    const auto rest = propagate_fourier(zero, w.v, t);
    derivative_identity = std::max({derivative_identity, per_mode_error(full.u, rest.u + lifted.u),
                                    per_mode_error(full.v, rest.v + lifted.v)});
  }
  out.metric("group_law", group);
  out.metric("time_reversal", reversal);
  out.metric("derivative_identity", derivative_identity);
  out.check("group law <= 1e-12 per mode", group <= 1e-12);
  out.check("time reversal <= 1e-12 per mode", reversal <= 1e-12);
  out.check("derivative identity <= 1e-12 per mode", derivative_identity <= 1e-12);
  return out.finish(3, "group_law_time_reversal");
}

double smooth_bump(double x) {
  return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
}

CriterionResult representation_reconciliation(const AcceptanceOptions& opt) {
  Outcome out;
  // n = 1: d'Alembert against the spectral solution.
  {
    const auto grid = make_grid(1, 40.0, 4096);
    const ScalarFunction u0 = [](double x) { return smooth_bump(x / 2.0); };
    const ScalarFunction v0 = [](double x) { return 0.5 * smooth_bump((x - 0.3) / 1.5); };
    const StateVector initial(
        forward_transform(RealField::sample(grid, [&](std::span<const double> x) { return u0(x[0]); })),
        forward_transform(RealField::sample(grid, [&](std::span<const double> x) { return v0(x[0]); })));
    DalembertOptions options;
    options.v0_breakpoints = {-1.2, 1.8};
    const Representation dalembert = [&](std::span<const double> x, double t) {
      return propagate_dalembert(u0, v0, x[0], t, options);
    };
    const Representation spectral = [&](std::span<const double> x, double t) {
      return evaluate_at(propagate_fourier(initial, t).u, x);
    };
    Rng rng(opt.seed + 4);
    std::vector<Probe> probes;
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(-10.0, 10.0);
      probes.push_back({{x}, rng.uniform(0.1, 8.0)});
    }
    const auto report = reconcile(spectral, dalembert, probes,
                                  {CausalWindow{grid.box_length(), 2.0}, 0.0});
    const double sup = report.summary_value("max_abs_err");
    const double outside = report.summary_value("outside_count");
    out.metric("dalembert_sup_err", sup);
    out.check("d'Alembert vs spectral sup error <= 1e-6", sup <= 1e-6);
    if (opt.strict) out.check("all d'Alembert probes inside the causal window", outside == 0.0);
  }
  // n = 3: Kirchhoff against the spectral solution.
  {
    const auto grid = make_grid(3, 40.0, 64);
    const std::array<double, 3> a{0.3, -0.2, 0.1};
    auto u0 = [a](double x, double y, double z) {
      const double dx = x - a[0], dy = y - a[1], dz = z - a[2];
      return std::exp(-0.5 * (dx * dx + dy * dy + dz * dz));
    };
    auto u0_grad = [a, u0](double x, double y, double z) {
      const double g = u0(x, y, z);
      return std::array<double, 3>{-(x - a[0]) * g, -(y - a[1]) * g, -(z - a[2]) * g};
    };
    auto v0 = [](double x, double y, double z) {
      return 0.8 * std::exp(-0.5 * (x * x + y * y + z * z));
    };
    const StateVector initial(
        forward_transform(RealField::sample(grid, [&](std::span<const double> p) { return u0(p[0], p[1], p[2]); })),
        forward_transform(RealField::sample(grid, [&](std::span<const double> p) { return v0(p[0], p[1], p[2]); })));
    const KirchhoffData data{u0, u0_grad, v0};
    int capped = 0;
    int max_order = 0;
    const Representation kirchhoff = [&](std::span<const double> x, double t) {
      const auto r = propagate_kirchhoff(data, {x[0], x[1], x[2]}, t);
      if (!r.converged) ++capped;
      max_order = std::max(max_order, r.order);
      return r.value;
    };
    const Representation spectral = [&](std::span<const double> x, double t) {
      return evaluate_at(propagate_fourier(initial, t).u, x);
    };
    Rng rng(opt.seed + 5);
    std::vector<Probe> probes;
    for (int i = 0; i < 20; ++i) {
      std::vector<double> x(3);
      for (double& c : x) c = rng.uniform(-1.2, 1.2);
      probes.push_back({x, rng.uniform(0.5, 4.0)});
    }
    const double radius = effective_data_radius(1.0) + 0.4;
    const auto report = reconcile(spectral, kirchhoff, probes,
                                  {CausalWindow{grid.box_length(), radius}, 1e-6});
    const double rel = report.summary_value("max_rel_err");
    out.metric("kirchhoff_max_rel_err", rel);
    out.metric("kirchhoff_max_order", max_order);
    out.check("Kirchhoff vs spectral relative error <= 1e-3", rel <= 1e-3);
    if (opt.strict) {
      out.check("Kirchhoff refinement converged at every probe", capped == 0);
      out.check("all Kirchhoff probes inside the causal window",
                report.summary_value("outside_count") == 0.0);
    }
  }
  return out.finish(4, "representation_reconciliation");
}

CriterionResult growth_bound_check(const AcceptanceOptions& opt) {
  Outcome out;
  const auto grid = make_grid(2, 20.0, 64);
  const auto fields = band_limited_corpus(grid, {12, opt.seed + 6, {0.0, 2.0}, {0.5, 2.0}});
  double worst = 0.0;
  double identity = 0.0;
  for (std::size_t i = 0; i + 1 < fields.size(); i += 2) {
    // Alternate the sign of v0 so both signs of (u0, v0) occur.
    const StateVector w(fields[i], (i % 4 == 0 ? 1.0 : -1.0) * fields[i + 1]);
    for (double t : {0.5, 1.0, 5.0, 20.0, 60.0}) {
      const double norm = l2_norm(propagate_fourier(w, t).u);
      worst = std::max(worst, norm * norm / growth_bound(w, t));
    }
    for (double t : {0.7, 3.0, 11.0}) {
      identity = std::max(identity, growth_identity_check(w, t).relative_error);
    }
  }
  out.metric("max_norm_sq_over_bound", worst);
  out.metric("identity_rel_err", identity);
  out.check("||u(t)||^2 <= bound (1 + 1e-9)", worst <= 1.0 + 1e-9);
  out.check("(u_t, u)' identity finite-difference agreement <= 1e-6", identity <= 1e-6);
  return out.finish(5, "growth_bound");
}

CriterionResult radial_growth(const AcceptanceOptions& opt) {
  Outcome out;
  const auto times = logspace(2.0, 4.0, 21);
  for (double eps : {0.1, 0.25, 0.4}) {
    const auto fit = fit_growth_exponent(radial_growth_series(eps, times), std::pair{1e2, 1e4});
    const std::string tag = "eps=" + label(eps);
    out.metric("slope_" + tag, fit.slope);
    out.check("slope = 1 - eps within 0.02 (" + tag + ")", std::abs(fit.slope - (1.0 - eps)) <= 0.02);
    if (opt.strict) out.check("fit r^2 >= 0.99 (" + tag + ")", !fit.flagged);
  }
  return out.finish(6, "radial_growth_exponent");
}

CriterionResult odd_power(const AcceptanceOptions& opt) {
  Outcome out;
  const double alpha = 1.25;
  const auto times = logspace(1.0, 3.0, 9);
  const auto series = odd_power_series(alpha, times, opt.jobs);
  const auto fit = fit_growth_exponent(series, std::pair{10.0, 1000.0});
  bool above = true;
  for (std::size_t i = 0; i < series.times.size(); ++i) above = above && series.values[i] >= series.bounds[i];
  out.metric("slope", fit.slope);
  out.metric("r2", fit.r_squared);
  out.check("growth exponent >= 0.22", fit.slope >= 0.22);
  out.check("norm dominates the lower-bound integral", above);
  if (opt.strict) out.check("fit r^2 >= 0.99", !fit.flagged);
  return out.finish(7, "odd_power_growth");
}

CriterionResult subquadratic(const AcceptanceOptions& opt) {
  Outcome out;
  const std::vector<double> times{1.0, 1000.0};
  auto ratio = [](const GrowthSeries& s) { return s.values.back() / s.values.front(); };
  double worst = 0.0;
  auto record = [&](const std::string& name, double r) {
    out.metric(name, r);
    worst = std::max(worst, r);
  };

  {
    // Lattice spectrum concentrated on |xi| = 1.
    const auto grid = make_grid(3, 2.0 * pi, 16);
    std::vector<Complex> coeffs(grid.size());
    const auto radii = grid.radial_frequencies();
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = std::abs(radii[k] - 1.0) < 1e-12 ? 1.0 : 0.0;
    record("single_shell", ratio(subquadratic_check(SpectralField(grid, coeffs), times, opt.jobs)));
  }
  {
    const auto grid = make_grid(3, 20.0, 32);
    const auto gapped = synthesize_radial_spectrum(grid, [](double r) {
      return r >= 0.5 && r <= 2.0 ? std::exp(-r * r) : 0.0;
    });
    record("gapped_lattice", ratio(subquadratic_check(gapped, times, opt.jobs)));
  }
  const RadialSpectrum gaussian{3, [](double r) { return std::exp(-0.5 * r * r); }, 9.0, false};
  record("gaussian_radial", ratio(subquadratic_check(gaussian, times, opt.jobs)));
  const RadialSpectrum gaussian_1d{1, [](double r) { return std::exp(-0.5 * r * r); }, 9.0, false};
  record("gaussian_radial_n1", ratio(subquadratic_check(gaussian_1d, times, opt.jobs)));
  record("power_eps=0.4", ratio(subquadratic_check(radial_growth_spectrum(0.4), times, opt.jobs)));
  out.check("t^-1 ||u(t)|| at t = 1000 <= 10% of its t = 1 value", worst <= 0.1);

  // The eps = 0.25 spectrum decays like t^{-1/4}; its ratio at t = 1000 is
  // about 0.2, so it is checked through the exponent instead.
  const auto slow_times = logspace(2.0, 4.0, 9);
  const auto slow = subquadratic_check(radial_growth_spectrum(0.25), slow_times, opt.jobs);
  const auto fit = fit_growth_exponent(slow, std::pair{1e2, 1e4});
  out.metric("eps=0.25_ratio_1000", ratio(subquadratic_check(radial_growth_spectrum(0.25), times, opt.jobs)));
  out.metric("eps=0.25_decay_slope", fit.slope);
  out.check("eps = 0.25 spectrum decays like t^-0.25 (within 0.02)", std::abs(fit.slope + 0.25) <= 0.02);
  return out.finish(8, "subquadratic_decay");
}

CriterionResult adjoint_identity(const AcceptanceOptions& opt) {
  Outcome out;
  Rng rng(opt.seed + 7);
  double worst = 0.0;
  bool injective = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const int cap = 1 + static_cast<int>(rng.uniform() * 200.0);
    const auto modes = ModeSystem::interval(rng.uniform(0.5, 5.0), std::min(cap, 200));
    const auto w = random_modal_state(modes.size(), rng);
    const auto z = random_modal_state(modes.size(), rng);
    const double scale = modal_norm(modes, w) * modal_norm(modes, z);
    worst = std::max(worst, adjoint_residual(modes, w, z) / scale);
    if (trial % 100 == 0) {
      injective = injective && adjoint_injectivity_margin(modes) > 0.0 &&
                  modal_norm(modes, apply_generator_adjoint(modes, z)) > 0.0;
    }
  }
  out.metric("max_scaled_residual", worst);
  out.check("adjoint residual <= 1e-12 ||w|| ||z||", worst <= 1e-12);
  out.check("adjoint injective on every mode block", injective);
  return out.finish(9, "adjoint_identity");
}

CriterionResult resolvent_bound(const AcceptanceOptions& opt) {
  Outcome out;
  const auto modes = ModeSystem::interval(pi, 10000);
  Rng rng(opt.seed + 8);
  const auto f = random_modal_state(modes.size(), rng);
  const auto w = random_modal_state(modes.size(), rng);
  double inverse = 0.0;
  for (double lambda : {0.6, 1.0, 2.0, 10.0, 100.0}) {
    const auto norm = resolvent_norm(modes, lambda);
    const std::string tag = "lambda=" + label(lambda);
    out.metric(tag, norm.value);
    out.check("||R|| <= 1/(lambda - 1/2) at " + tag, norm.bound && norm.within_bound);

    auto diff_norm = [&](const ModalState& a, const ModalState& b) {
      auto d = ModalState::zeros(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        d.u[j] = a.u[j] - b.u[j];
        d.v[j] = a.v[j] - b.v[j];
      }
      return modal_norm(modes, d) / modal_norm(modes, b);
    };
    inverse = std::max(inverse, diff_norm(shifted_generator_apply(modes, lambda, resolvent_apply(modes, lambda, f)), f));
    inverse = std::max(inverse, diff_norm(resolvent_apply(modes, lambda, shifted_generator_apply(modes, lambda, w)), w));
  }
  out.metric("two_sided_inverse", inverse);
  out.check("two-sided inverse residual <= 1e-12", inverse <= 1e-12);
  return out.finish(10, "resolvent_bound");
}

CriterionResult exhaustion(const AcceptanceOptions& opt) {
  Outcome out;
  for (int dims : {1, 2}) {
    auto config = default_exhaustion_config(dims);
    config.jobs = opt.jobs;
    const auto result = exhaustion_experiment(config);
    const std::string tag = "n=" + std::to_string(dims);
    double causal = 0.0;
    for (const auto& d : result.domains) causal = std::max(causal, d.max_causal_error);
    out.metric("causal_err_" + tag, causal);
    for (const auto& d : result.domains) out.metric("max_err_j" + label(d.half_width) + "_" + tag, d.max_error);
    out.check("causal-window error <= 1e-4 (" + tag + ")", result.causal_ok);
    out.check("max error nonincreasing in j within 5% (" + tag + ")", result.monotone_ok);
    out.check("initial projection error <= 1e-6 (" + tag + ")", result.projection_ok);
  }
  return out.finish(11, "domain_exhaustion");
}

CriterionResult smoothing(const AcceptanceOptions& opt) {
  Outcome out;
  const auto grid = make_grid(3, 4.0 * pi, 32);
  CorpusSpec spec;
  spec.seed = opt.seed + 9;
  const auto corpus = band_limited_corpus(grid, spec);
  const std::vector<double> times{0.25, 0.5, 1.0, 2.0, 4.0};
  const auto report = smoothing_experiment(corpus, times, opt.jobs);
  const double worst = report.summary_value("max_ratio_over_bound");
  const double slope = report.summary_value("operator_norm_slope");
  out.metric("c_hat", report.summary_value("c_hat"));
  out.metric("max_ratio_over_bound", worst);
  out.metric("scaling_slope", slope);
  out.check("ratio <= C max(1, t^-(n+1)/2) on the corpus", worst <= 1.0 + 1e-12);
  out.check("scaling slope = -(n+1)/2 within 0.1", std::abs(slope + 2.0) <= 0.1);
  return out.finish(12, "smoothing_law");
}

CriterionResult ball_cube(const AcceptanceOptions&) {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    const double s = 0.5 * (n + 1);
    const auto near = ball_weighted_sup(n, s, 1e2);
    const auto far = ball_weighted_sup(n, s, 1e3);
    const std::string tag = "n=" + std::to_string(n);
    out.metric("ball_sup_" + tag, far.value);
    out.check("ball weighted sup bounded to r = 1e3 (" + tag + ")",
              std::isfinite(far.value) && far.value <= near.value * (1.0 + 1e-9));
  }
  const int n = 3;
  double previous_10 = 0.0;
  double previous_11 = 0.0;
  bool stable = true;
  bool growing = true;
  for (double r_max : {1e2, 1e3, 1e4}) {
    const double s10 = cube_axis_weighted_sup(n, 1.0, r_max).value;
    const double s11 = cube_axis_weighted_sup(n, 1.1, r_max).value;
    if (previous_10 > 0.0) {
      stable = stable && s10 <= previous_10 * (1.0 + 1e-6);
      growing = growing && s11 > previous_11 * 1.05;
    }
    previous_10 = s10;
    previous_11 = s11;
  }
  out.metric("cube_sup_s1.0", previous_10);
  out.metric("cube_sup_s1.1", previous_11);
  out.metric("factor_at_1e4", previous_11 / previous_10);
  out.check("cube weighted sup finite at exponent 1.0", stable);
  out.check("cube weighted sup grows per decade at exponent 1.1", growing);
  return out.finish(13, "ball_cube_dichotomy");
}

CriterionResult kirchhoff_identity(const AcceptanceOptions& opt) {
  Outcome out;
  const auto grid = make_grid(3, 40.0, 64);
  const auto v0 = band_limited_corpus(grid, {1, opt.seed + 10, {0.0, 1.0}, {3.0, 4.0}}).front();
  double worst = 0.0;
  for (double t : {0.3, 1.0, 2.5}) worst = std::max(worst, kirchhoff_identity_check(v0, t).max_multiplier_residual);
  out.metric("max_multiplier_residual", worst);
  out.check("multiplier residual <= 1e-10", worst <= 1e-10);
  return out.finish(14, "kirchhoff_identity");
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);
constexpr Runner kRunners[] = {
    plancherel_roundtrip, energy_conservation, group_law,     representation_reconciliation,
    growth_bound_check,   radial_growth,       odd_power,     subquadratic,
    adjoint_identity,     resolvent_bound,     exhaustion,    smoothing,
    ball_cube,            kirchhoff_identity,
};

constexpr const char* kNames[] = {
    "plancherel_roundtrip", "energy_conservation",    "group_law_time_reversal",
    "representation_reconciliation", "growth_bound", "radial_growth_exponent",
    "odd_power_growth",     "subquadratic_decay",     "adjoint_identity",
    "resolvent_bound",      "domain_exhaustion",      "smoothing_law",
    "ball_cube_dichotomy",  "kirchhoff_identity",
};

}  // namespace

int acceptance_criterion_count() { return static_cast<int>(std::size(kRunners)); }

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > acceptance_criterion_count()) {
    throw std::invalid_argument("run_criterion: unknown criterion id " + std::to_string(id));
  }
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = kRunners[id - 1](options);
  } catch (const std::exception& e) {
    result = {id, kNames[id - 1], false, std::string("error: ") + e.what(), 0.0, {}};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::span<const int> ids) {
  std::vector<int> selected(ids.begin(), ids.end());
  if (selected.empty()) {
    for (int id = 1; id <= acceptance_criterion_count(); ++id) selected.push_back(id);
  }
  std::sort(selected.begin(), selected.end());
  std::vector<CriterionResult> results;
  for (int id : selected) results.push_back(run_criterion(id, options));
  return results;
}

std::string format_criterion(const CriterionResult& result) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-30s ", result.passed ? "PASS" : "FAIL", result.id,
                result.name.c_str());
  char tail[48];
  std::snprintf(tail, sizeof tail, " (%.2f s)", result.seconds);
  return head + result.detail + tail;
}

}  // namespace wavelab
