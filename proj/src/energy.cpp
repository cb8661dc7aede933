#include "wavelab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wavelab/norms.hpp"
#include "wavelab/parallel.hpp"
#include "wavelab/propagators.hpp"
#include "wavelab/quadrature.hpp"

namespace wavelab {

using std::numbers::pi;

double energy(const StateVector& w) {
  const double grad = h1_seminorm(w.u);
  const double vel = l2_norm(w.v);
  return 0.5 * (grad * grad + vel * vel);
}

double energy(const ModeSystem& modes, const ModalState& w) {
  require_matching(modes, w, "energy");
  std::vector<double> terms(modes.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    terms[j] = modes.eigenvalue(j) * w.u[j] * w.u[j] + w.v[j] * w.v[j];
  }
  return 0.5 * pairwise_sum(terms);
}

namespace {

double relative_change(double value, double reference) {
  return reference == 0.0 ? std::abs(value) : std::abs(value - reference) / reference;
}

}  // namespace

double energy_drift(const StateVector& initial, std::span<const double> times) {
  const double e0 = energy(initial);
  double drift = 0.0;
  for (double t : times) drift = std::max(drift, relative_change(energy(propagate_fourier(initial, t)), e0));
  return drift;
}

double energy_drift(const ModeSystem& modes, const ModalState& initial,
                    std::span<const double> times) {
  const double e0 = energy(modes, initial);
  double drift = 0.0;
  for (double t : times) {
    drift = std::max(drift, relative_change(energy(modes, propagate_eigen(modes, initial, t)), e0));
  }
  return drift;
}

double growth_bound(const StateVector& initial, double t) {
  const double u0 = l2_norm(initial.u);
  return u0 * u0 + 2.0 * t * l2_inner_product(initial.u, initial.v) + 2.0 * energy(initial) * t * t;
}

GrowthIdentityCheck growth_identity_check(const StateVector& initial, double t, double step) {
  auto pairing = [&](double s) {
    const auto w = propagate_fourier(initial, s);
    return l2_inner_product(w.v, w.u);
  };
  const double fd = (pairing(t + step) - pairing(t - step)) / (2.0 * step);
  const auto w = propagate_fourier(initial, t);
  const double vel = l2_norm(w.v);
  const double grad = h1_seminorm(w.u);
  const double spectral = vel * vel - grad * grad;
  const double scale = 2.0 * energy(initial);
  const double err = std::abs(fd - spectral);
  return {fd, spectral, scale > 0.0 ? err / scale : err};
}

// ---------------------------------------------------------------------------

void GrowthSeries::validate() const {
  if (times.size() != values.size()) {
    throw std::invalid_argument("GrowthSeries: times and values differ in length");
  }
  if (!bounds.empty() && bounds.size() != times.size()) {
    throw std::invalid_argument("GrowthSeries: bounds and times differ in length");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("GrowthSeries: times must increase strictly");
    }
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw std::invalid_argument("GrowthSeries: values must be finite and nonnegative");
    }
  }
}

ExperimentReport GrowthSeries::to_report() const {
  validate();
  ExperimentReport report(example.empty() ? "growth" : example, {"t", "value", "bound", "ratio"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double bound = bounds.empty() ? nan : bounds[i];
    const double ratio = bounds.empty() || bound == 0.0 ? nan : values[i] / bound;
    report.add_row({times[i], values[i], bound, ratio});
  }
  for (const auto& [key, value] : parameters) report.set_summary(key, value);
  if (!provenance.empty()) report.add_note(provenance);
  return report;
}

ExponentFit fit_growth_exponent(const GrowthSeries& series,
                                std::optional<std::pair<double, double>> window) {
  series.validate();
  if (series.times.empty()) throw std::invalid_argument("fit_growth_exponent: empty series");
  const double t_max = series.times.back();
  const auto [lo, hi] = window.value_or(std::pair{t_max / 100.0, t_max});

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    const double t = series.times[i];
    if (t < lo * (1 - 1e-12) || t > hi * (1 + 1e-12)) continue;
    if (!(series.values[i] > 0.0) || !(t > 0.0)) {
      throw std::invalid_argument("fit_growth_exponent: nonpositive entry inside the window");
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(series.values[i]));
  }
  const std::size_t m = xs.size();
  if (m < 2) throw std::invalid_argument("fit_growth_exponent: fewer than two points in window");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_growth_exponent: degenerate time window");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss_res += r * r;
  }
  // A constant series is fitted exactly; call that r^2 = 1.
  const double r2 = syy <= 1e-300 ? 1.0 : 1.0 - ss_res / syy;
  return {slope, intercept, r2, m, r2 < 0.99};
}

// ---------------------------------------------------------------------------

GrowthSeries subquadratic_check(const SpectralField& v0_hat, std::span<const double> times,
                                int jobs) {
  const auto radii = v0_hat.grid().radial_frequencies();
  const double cell = v0_hat.grid().frequency_cell_volume();
  GrowthSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t i) {
    const double t = times[i];
    if (!(t > 0.0)) throw std::invalid_argument("subquadratic_check: times must be positive");
    std::vector<double> terms(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const double r = radii[k];
      const double s = r > 0.0 ? std::sin(r * t) / r : t;
      terms[k] = std::norm(v0_hat[k]) * s * s;
    }
    series.values[i] = std::sqrt(cell * pairwise_sum(terms)) / t;
  });
  series.example = "subquadratic_lattice";
  series.provenance = "lattice sum of |v0^|^2 sin^2(|xi| t)/|xi|^2";
  series.validate();
  return series;
}

double unit_sphere_area(int dims) {
  switch (dims) {
    case 1: return 2.0;
    case 2: return 2.0 * pi;
    case 3: return 4.0 * pi;
    default: throw std::invalid_argument("unit_sphere_area: dims must be 1, 2 or 3");
  }
}

namespace {

void check_radial(const RadialSpectrum& spectrum) {
  unit_sphere_area(spectrum.dims);
  if (!spectrum.profile) throw std::invalid_argument("RadialSpectrum: profile missing");
  if (!(spectrum.cutoff > 0.0) || !std::isfinite(spectrum.cutoff)) {
    throw std::invalid_argument("RadialSpectrum: cutoff must be positive and finite");
  }
}

// Below this radius integrable singularities contribute nothing visible in
// double precision, while r^k * profile(r)^2 would evaluate as 0 * inf.
constexpr double kNegligibleRadius = 1e-200;

void require_converged(const QuadratureResult& r, const char* what) {
  if (!r.converged) throw QuadratureError(what, r.error);
}

}  // namespace

double radial_l2_norm(const RadialSpectrum& spectrum, double rel_tol) {
  check_radial(spectrum);
  const int n = spectrum.dims;
  auto integrand = [&](double r) {
    if (r < kNegligibleRadius) return 0.0;
    const double p = spectrum.profile(r);
    return std::pow(r, n - 1) * p * p;
  };
  const auto result = spectrum.singular_at_origin
                          ? integrate_endpoint_singular(integrand, 0.0, spectrum.cutoff, rel_tol)
                          : integrate(integrand, 0.0, spectrum.cutoff, rel_tol);
  require_converged(result, "radial_l2_norm");
  return std::sqrt(unit_sphere_area(n) * result.value);
}

double radial_solution_norm(const RadialSpectrum& spectrum, double t, double rel_tol) {
  check_radial(spectrum);
  if (t < 0.0) throw std::invalid_argument("radial_solution_norm: t must be nonnegative");
  if (t == 0.0) return 0.0;
  const int n = spectrum.dims;
  auto integrand = [&](double r) {
    if (r < kNegligibleRadius) return 0.0;
    const double p = spectrum.profile(r);
    const double s = r > 0.0 ? std::sin(r * t) / r : t;
    return std::pow(r, n - 1) * p * p * s * s;
  };
  // One half-period of sin(r t) per panel; the first panel carries any
  // singularity at r = 0.
  const double width = pi / t;
  const double first = std::min(spectrum.cutoff, width);
  auto head = spectrum.singular_at_origin ? integrate_endpoint_singular(integrand, 0.0, first, rel_tol)
                                          : integrate(integrand, 0.0, first, rel_tol);
  require_converged(head, "radial_solution_norm");
  double total = head.value;
  if (first < spectrum.cutoff) {
    const auto tail = integrate_panels(integrand, first, spectrum.cutoff, width, rel_tol);
    require_converged(tail, "radial_solution_norm");
    total += tail.value;
  }
  return std::sqrt(unit_sphere_area(n) * total);
}

GrowthSeries subquadratic_check(const RadialSpectrum& spectrum, std::span<const double> times,
                                int jobs) {
  GrowthSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t i) {
    if (!(times[i] > 0.0)) throw std::invalid_argument("subquadratic_check: times must be positive");
    series.values[i] = radial_solution_norm(spectrum, times[i]) / times[i];
  });
  series.example = "subquadratic_radial";
  series.parameters = {{"dims", spectrum.dims}, {"cutoff", spectrum.cutoff}};
  series.provenance = "radial quadrature of |v0^|^2 sin^2(r t)/r^2";
  series.validate();
  return series;
}

double gapped_orbit_ratio(const SpectralField& v0_hat, double gap, std::span<const double> times) {
  if (!(gap > 0.0)) throw std::invalid_argument("gapped_orbit_ratio: gap must be positive");
  const double reference = l2_norm(v0_hat) / gap;
  if (reference == 0.0) return 0.0;
  const auto zero = SpectralField::zeros(v0_hat.grid());
  double worst = 0.0;
  for (double t : times) {
    worst = std::max(worst, l2_norm(propagate_fourier(zero, v0_hat, t).u) / reference);
  }
  return worst;
}

// ---------------------------------------------------------------------------

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw std::invalid_argument("radial growth example: eps must lie in (0, 1/2]");
  }
}

// int_a^b s^{2 eps - 1} (sin s / s)^2 ds for 0 <= a <= b, with a tanh-sinh
// rule on any part below pi (singular at 0 for eps < 1/2) and pi-wide
// Gauss-Kronrod panels above.
double growth_integral(double eps, double a, double b) {
  auto f = [eps](double s) {
    const double sinc = s > 0.0 ? std::sin(s) / s : 1.0;
    return std::pow(s, 2.0 * eps - 1.0) * sinc * sinc;
  };
  constexpr double tol = 1e-12;
  double total = 0.0;
  const double split = std::min(b, pi);
  if (a < split) {
    const auto head = a == 0.0 ? integrate_endpoint_singular(f, 0.0, split, tol)
                               : integrate(f, a, split, tol);
    require_converged(head, "radial_growth_example");
    total += head.value;
  }
  const double lo = std::max(a, pi);
  if (lo < b) {
    const auto tail = integrate_panels(f, lo, b, pi, tol);
    require_converged(tail, "radial_growth_example");
    total += tail.value;
  }
  return total;
}

}  // namespace

double radial_growth_example(double eps, double t) {
  check_eps(eps);
  if (t < 0.0) throw std::invalid_argument("radial_growth_example: t must be nonnegative");
  if (t == 0.0) return 0.0;
  return std::pow(t, 1.0 - eps) * std::sqrt(4.0 * pi * growth_integral(eps, 0.0, t));
}

GrowthSeries radial_growth_series(double eps, std::span<const double> times) {
  check_eps(eps);
  GrowthSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.reserve(times.size());
  double cumulative = 0.0;
  double previous = 0.0;
  for (double t : times) {
    if (t < previous) throw std::invalid_argument("radial_growth_series: times must increase");
    cumulative += growth_integral(eps, previous, t);
    previous = t;
    series.values.push_back(t == 0.0 ? 0.0 : std::pow(t, 1.0 - eps) * std::sqrt(4.0 * pi * cumulative));
  }
  series.example = "radial_growth";
  series.parameters = {{"eps", eps}, {"dims", 3}};
  series.provenance = "radial quadrature, v0^ = |xi|^{eps-3/2} on |xi| <= 1";
  series.validate();
  return series;
}

RadialSpectrum radial_growth_spectrum(double eps) {
  check_eps(eps);
  return {3, [eps](double r) { return std::pow(r, eps - 1.5); }, 1.0, true};
}

double modulated_growth_norm(double eps, double amplitude, double frequency, double t) {
  check_eps(eps);
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
    throw std::invalid_argument("modulated_growth_norm: amplitude must lie in [0, 1]");
  }
  if (!(frequency >= 0.0)) throw std::invalid_argument("modulated_growth_norm: frequency must be nonnegative");
  if (t < 0.0) throw std::invalid_argument("modulated_growth_norm: t must be nonnegative");
  if (t == 0.0) return 0.0;
  // With s = r t the squared norm is
  //   4 pi t^{2 - 2 eps} int_0^t s^{2 eps - 3} (1 + a sin(w log(s / t))) sin^2 s ds.
  const double log_t = std::log(t);
  auto weight = [=](double log_s) { return 1.0 + amplitude * std::sin(frequency * (log_s - log_t)); };
  constexpr double tol = 1e-11;
  // Below s = min(1, t) substitute s = e^{-y}: the integrand becomes
  // e^{-2 eps y} (sin s / s)^2 times the weight, smooth in y; cut where
  // e^{-2 eps y} < 1e-16.
  const double head_end = std::min(1.0, t);
  const double y0 = -std::log(head_end);
  const double y1 = y0 + 37.0 / (2.0 * eps);
  auto head_integrand = [&](double y) {
    const double s = std::exp(-y);
    const double sinc = s > 0.0 ? std::sin(s) / s : 1.0;
    return std::exp(-2.0 * eps * y) * weight(-y) * sinc * sinc;
  };
  const double period = frequency > 0.0 ? 2.0 * pi / frequency : y1 - y0;
  const auto head = integrate_panels(head_integrand, y0, y1, std::min(period, y1 - y0), tol);
  require_converged(head, "modulated_growth_norm");
  double total = head.value;
  if (t > 1.0) {
    auto tail_integrand = [&](double s) {
      const double sn = std::sin(s);
      return std::pow(s, 2.0 * eps - 3.0) * weight(std::log(s)) * sn * sn;
    };
    const auto tail = integrate_panels(tail_integrand, 1.0, t, pi, tol);
    require_converged(tail, "modulated_growth_norm");
    total += tail.value;
  }
  return std::pow(t, 1.0 - eps) * std::sqrt(4.0 * pi * total);
}

// ---------------------------------------------------------------------------

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha < 1.5)) {
    throw std::invalid_argument("odd power example: alpha must lie in (1, 3/2)");
  }
}

}  // namespace

double odd_power_velocity(double alpha, double x) {
  check_alpha(alpha);
  const double ax = std::abs(x);
  if (ax <= 1.0) return 0.0;
  return std::copysign(std::pow(ax, -alpha), x);
}

double odd_power_lower_bound(double alpha, double t) {
  check_alpha(alpha);
  if (t < 1.0) throw std::invalid_argument("odd_power_lower_bound: t must be at least 1");
  const double beta = 1.0 - alpha;
  auto f = [&](double x) {
    // (x+t)^beta - (x-t)^beta without cancellation for x >> t.
    const double d = std::pow(x - t, beta) * std::expm1(beta * std::log1p(2.0 * t / (x - t))) / beta;
    return d * d;
  };
  // Decade panels up to far, then the leading term 4 t^2 x^{-2 alpha}.
  const double far = 1e6 * (t + 1.0);
  std::vector<double> breaks;
  for (double edge = 10.0 * (t + 1.0); edge < 0.5 * far; edge *= 10.0) breaks.push_back(edge);
  const auto result = integrate(f, t + 1.0, far, 1e-10, breaks);
  require_converged(result, "odd_power_lower_bound");
  return result.value + 4.0 * t * t * std::pow(far, 1.0 - 2.0 * alpha) / (2.0 * alpha - 1.0);
}

double odd_power_norm(double alpha, double t) {
  check_alpha(alpha);
  if (t < 0.0) throw std::invalid_argument("odd_power_norm: t must be nonnegative");
  if (t == 0.0) return 0.0;
  const ScalarFunction u0 = [](double) { return 0.0; };
  const ScalarFunction v0 = [alpha](double x) { return odd_power_velocity(alpha, x); };
  DalembertOptions options;
  options.tolerance = 1e-11;
  options.v0_breakpoints = {-1.0, 1.0};
  auto u_squared = [&](double x) {
    const double u = propagate_dalembert(u0, v0, x, t, options);
    return u * u;
  };
  // u is odd in x, so ||u||^2 = 2 int_0^inf u^2. The d'Alembert window
  // [x - t, x + t] crosses the jumps of v0 at x = |t - 1| and t + 1. Beyond
  // that, u^2 decays like x^{-2 alpha}; it is integrated over decades up to
  // far = 10^6 (t + 1) (further out the window is too thin relative to x for
  // the inner rule) and the rest is the leading term t^2 x^{-2 alpha}.
  const double near = 2.0 * (t + 1.0);
  const double far = 1e6 * (t + 1.0);
  std::vector<double> breaks{std::abs(t - 1.0), t + 1.0};
  for (double edge = near; edge < 0.5 * far; edge *= 10.0) breaks.push_back(edge);
  const auto result = integrate(u_squared, 0.0, far, 1e-9, breaks);
  require_converged(result, "odd_power_norm");
  const double tail = t * t * std::pow(far, 1.0 - 2.0 * alpha) / (2.0 * alpha - 1.0);
  return std::sqrt(2.0 * (result.value + tail));
}

GrowthSeries odd_power_series(double alpha, std::span<const double> times, int jobs) {
  check_alpha(alpha);
  GrowthSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  series.bounds.resize(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t i) {
    series.values[i] = odd_power_norm(alpha, times[i]);
    // 4 ||u||^2 >= lower bound, so ||u|| >= sqrt(bound) / 2.
    series.bounds[i] = times[i] >= 1.0 ? 0.5 * std::sqrt(odd_power_lower_bound(alpha, times[i])) : 0.0;
  });
  series.example = "odd_power";
  series.parameters = {{"alpha", alpha}};
  series.provenance = "d'Alembert integral with outer Gauss-Kronrod quadrature";
  series.validate();
  return series;
}

}  // namespace wavelab
