#include "wavelab/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/parallel.hpp"
#include "wavelab/quadrature.hpp"
#include "wavelab/random.hpp"
#include "wavelab/sphere_rules.hpp"

namespace wavelab {

using std::numbers::pi;

namespace {

void check_dims(int dims, const char* what) {
  if (dims < 1 || dims > 3) throw std::invalid_argument(std::string(what) + ": dims must be 1, 2 or 3");
}

void check_time(double t, const char* what) {
  if (!(t > 0.0)) throw std::invalid_argument(std::string(what) + ": t must be positive");
}

const double kSqrtTwoOverPi = std::sqrt(2.0 / pi);

// (sin r - r cos r) / r^3, with its Taylor series where the difference
// cancels: sum_k (-1)^k (2k + 2) r^{2k} / (2k + 3)!.
double ball_kernel_3d(double r) {
  if (std::abs(r) < 0.1) {
    const double r2 = r * r;
    double term = 1.0;
    double factorial = 6.0;  // (2k + 3)! at k = 0
    double sum = 0.0;
    for (int k = 0; k < 8; ++k) {
      sum += term * (2.0 * k + 2.0) / factorial;
      term *= -r2;
      factorial *= (2.0 * k + 4.0) * (2.0 * k + 5.0);
    }
    return sum;
  }
  return (std::sin(r) - r * std::cos(r)) / (r * r * r);
}

double sinc(double r) { return r == 0.0 ? 1.0 : std::sin(r) / r; }

SpectralField multiply(const SpectralField& f, const std::function<double(double)>& symbol) {
  return apply_radial_multiplier(f, symbol);
}

}  // namespace

double ball_volume(int dims) {
  check_dims(dims, "ball_volume");
  static constexpr double kVolumes[] = {2.0, pi, 4.0 * pi / 3.0};
  return kVolumes[dims - 1];
}

double chi_ball_hat(int dims, double r) {
  check_dims(dims, "chi_ball_hat");
  r = std::abs(r);
  switch (dims) {
    case 1:
      return kSqrtTwoOverPi * sinc(r);
    case 2:
      return r == 0.0 ? 0.5 : std::cyl_bessel_j(1.0, r) / r;
    default:
      return kSqrtTwoOverPi * ball_kernel_3d(r);
  }
}

double chi_cube_hat(std::span<const double> xi) {
  check_dims(static_cast<int>(xi.size()), "chi_cube_hat");
  double value = std::pow(2.0 / std::sqrt(2.0 * pi), static_cast<double>(xi.size()));
  for (double x : xi) value *= sinc(x);
  return value;
}

double ball_multiplier(int dims, double r) {
  return std::pow(2.0 * pi, 0.5 * dims) * chi_ball_hat(dims, r);
}

double sphere_multiplier(int dims, double r) {
  check_dims(dims, "sphere_multiplier");
  switch (dims) {
    case 1: return 2.0 * std::cos(r);
    case 2: return 2.0 * pi * std::cyl_bessel_j(0.0, std::abs(r));
    default: return 4.0 * pi * sinc(r);
  }
}

SpectralField ball_average(const SpectralField& f, double t) {
  check_time(t, "ball_average");
  const int n = f.grid().dims();
  return multiply(f, [n, t](double r) { return ball_multiplier(n, t * r); });
}

SpectralField sphere_average(const SpectralField& f, double t) {
  check_time(t, "sphere_average");
  const int n = f.grid().dims();
  return multiply(f, [n, t](double r) { return sphere_multiplier(n, t * r); });
}

SpectralField normalized_ball_average(const SpectralField& f, double t) {
  return (1.0 / ball_volume(f.grid().dims())) * ball_average(f, t);
}

SpectralField normalized_sphere_average(const SpectralField& f, double t) {
  return (1.0 / unit_sphere_area(f.grid().dims())) * sphere_average(f, t);
}

double sphere_average_at(const Function3& f, const std::array<double, 3>& x, double t, int order) {
  check_time(t, "sphere_average_at");
  const auto rule = SphereRule::at_least(order);
  return rule.integrate([&](double zx, double zy, double zz) {
    return f(x[0] + t * zx, x[1] + t * zy, x[2] + t * zz);
  });
}

double ball_average_at(const Function3& f, const std::array<double, 3>& x, double t,
                       int radial_nodes, int order) {
  check_time(t, "ball_average_at");
  const auto rule = SphereRule::at_least(order);
  const auto gl = gauss_legendre(radial_nodes);
  std::vector<double> shells(gl.nodes.size());
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double rho = 0.5 * (gl.nodes[i] + 1.0);
    const double tau = t * rho;
    const double shell = rule.integrate([&](double zx, double zy, double zz) {
      return f(x[0] + tau * zx, x[1] + tau * zy, x[2] + tau * zz);
    });
    shells[i] = 0.5 * gl.weights[i] * rho * rho * shell;
  }
  return pairwise_sum(shells);
}

// ---------------------------------------------------------------------------

double smoothing_ratio(const SpectralField& f, double t, double s) {
  check_time(t, "smoothing_ratio");
  const double norm = l2_norm(f);
  if (norm == 0.0) throw std::invalid_argument("smoothing_ratio: f must be nonzero");
  return hs_norm(ball_average(f, t), s) / norm;
}

double smoothing_ratio(const SpectralField& f, double t) {
  return smoothing_ratio(f, t, 0.5 * (f.grid().dims() + 1));
}

double smoothing_operator_norm(int dims, double t, double s, double rho_max, double step) {
  check_time(t, "smoothing_operator_norm");
  double sup = 0.0;
  const auto count = static_cast<std::size_t>(std::ceil(rho_max / step));
  for (std::size_t i = 0; i <= count; ++i) {
    const double rho = static_cast<double>(i) * step;
    const double r = rho / t;
    sup = std::max(sup, (1.0 + std::pow(r, s)) * std::abs(ball_multiplier(dims, rho)));
  }
  return sup;
}

double ball_derivative_operator_norm(int dims, double t, int k, double rho_max, double step) {
  check_time(t, "ball_derivative_operator_norm");
  double sup = 0.0;
  const auto count = static_cast<std::size_t>(std::ceil(rho_max / step));
  for (std::size_t i = 0; i <= count; ++i) {
    const double rho = static_cast<double>(i) * step;
    sup = std::max(sup, std::pow(rho / t, k) * std::abs(ball_multiplier(dims, rho)));
  }
  return sup;
}

std::vector<SpectralField> band_limited_corpus(const GridSpec& grid, const CorpusSpec& spec) {
  Rng rng(spec.seed);
  const auto radii = grid.radial_frequencies();
  std::vector<SpectralField> corpus;
  corpus.reserve(spec.count);
  for (std::size_t c = 0; c < spec.count; ++c) {
    const double lo = rng.uniform(spec.low_band[0], spec.low_band[1]);
    const double hi = lo + rng.uniform(spec.band_width[0], spec.band_width[1]);
    std::vector<Complex> raw(grid.size(), Complex{});
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (radii[k] >= lo && radii[k] <= hi) {
        const double re = rng.normal();
        const double im = rng.normal();
        raw[k] = {re, im};
      }
    }
    std::vector<Complex> sym(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      sym[k] = 0.5 * (raw[k] + std::conj(raw[mirror_index(grid, k)]));
    }
    SpectralField field(grid, std::move(sym));
    const double norm = l2_norm(field);
    if (norm == 0.0) {
      throw std::invalid_argument("band_limited_corpus: a drawn band holds no lattice points");
    }
    corpus.push_back((1.0 / norm) * field);
  }
  return corpus;
}

namespace {

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  GrowthSeries series;
  series.times.assign(xs.begin(), xs.end());
  series.values.assign(ys.begin(), ys.end());
  return fit_growth_exponent(series, std::pair{xs.front(), xs.back()}).slope;
}

}  // namespace

ExperimentReport smoothing_experiment(std::span<const SpectralField> corpus,
                                      std::span<const double> times, int jobs) {
  if (corpus.empty()) throw std::invalid_argument("smoothing_experiment: empty corpus");
  const auto unit = std::find(times.begin(), times.end(), 1.0);
  if (unit == times.end()) throw std::invalid_argument("smoothing_experiment: t = 1 must be sampled");
  const int n = corpus.front().grid().dims();
  const double s = 0.5 * (n + 1);

  std::vector<std::vector<double>> ratios(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    for (double t : times) ratios[i].push_back(smoothing_ratio(corpus[i], t, s));
  });

  const auto unit_column = static_cast<std::size_t>(unit - times.begin());
  double c_hat = 0.0;
  for (const auto& row : ratios) c_hat = std::max(c_hat, row[unit_column]);

  ExperimentReport report("smoothing", {"field", "t", "ratio", "bound", "ratio_over_bound"});
  double worst = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double bound = c_hat * std::max(1.0, std::pow(times[k], -s));
      worst = std::max(worst, ratios[i][k] / bound);
      report.add_row({static_cast<double>(i), times[k], ratios[i][k], bound, ratios[i][k] / bound});
    }
  }

  std::vector<double> small_t, op_norms;
  for (double t : times) {
    if (t < 1.0) {
      small_t.push_back(t);
      op_norms.push_back(smoothing_operator_norm(n, t, s));
    }
  }
  std::vector<std::size_t> order(small_t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return small_t[a] < small_t[b]; });
  std::vector<double> xs, ys;
  for (auto i : order) {
    xs.push_back(small_t[i]);
    ys.push_back(op_norms[i]);
  }

  report.set_summary("s", s);
  report.set_summary("c_hat", c_hat);
  report.set_summary("max_ratio_over_bound", worst);
  report.set_summary("operator_norm_slope", loglog_slope(xs, ys));
  report.set_summary("expected_slope", -s);
  return report;
}

ExperimentReport derivative_estimates_check(const SpectralField& f, std::span<const double> times) {
  const double norm = l2_norm(f);
  if (norm == 0.0) throw std::invalid_argument("derivative_estimates_check: f must be nonzero");
  const int n = f.grid().dims();
  ExperimentReport report("derivative_estimates",
                          {"t", "ratio_N", "ratio_grad_N", "ratio_lap_N", "ratio_grad_M",
                           "gradient_margin", "pairing_residual", "op_N", "op_grad_N", "op_lap_N"});
  std::vector<double> ts, field[3], op[3];
  for (double t : times) {
    const auto g = ball_average(f, t);
    const auto dg = derivative(g, 0);
    const auto lap = laplacian(g);
    const double grad_full = h1_seminorm(g);
    const double grad_axis = l2_norm(dg);
    const double pairing = l2_inner_product(g, lap);
    const double residual =
        grad_full > 0.0 ? std::abs(pairing + grad_full * grad_full) / (grad_full * grad_full) : 0.0;
    const double row_field[3] = {l2_norm(g) / norm, grad_axis / norm, l2_norm(lap) / norm};
    const double row_op[3] = {ball_derivative_operator_norm(n, t, 0),
                              ball_derivative_operator_norm(n, t, 1),
                              ball_derivative_operator_norm(n, t, 2)};
    const double grad_m = l2_norm(derivative(sphere_average(f, t), 0)) / norm;
    report.add_row({t, row_field[0], row_field[1], row_field[2], grad_m, grad_full - grad_axis,
                    residual, row_op[0], row_op[1], row_op[2]});
    if (t <= 1.0) {
      ts.push_back(t);
      for (int k = 0; k < 3; ++k) {
        field[k].push_back(row_field[k]);
        op[k].push_back(row_op[k]);
      }
    }
  }
  std::vector<std::size_t> order(ts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ts[a] < ts[b]; });
  auto sorted = [&](const std::vector<double>& v) {
    std::vector<double> out;
    for (auto i : order) out.push_back(v[i]);
    return out;
  };
  const auto xs = sorted(ts);
  static constexpr const char* kNames[3] = {"N", "grad_N", "lap_N"};
  for (int k = 0; k < 3; ++k) {
    report.set_summary(std::string("field_slope_") + kNames[k], loglog_slope(xs, sorted(field[k])));
    report.set_summary(std::string("operator_slope_") + kNames[k], loglog_slope(xs, sorted(op[k])));
  }
  return report;
}

// ---------------------------------------------------------------------------

KirchhoffIdentityResult kirchhoff_identity_check(const SpectralField& v0_hat, double t) {
  check_time(t, "kirchhoff_identity_check");
  if (v0_hat.grid().dims() != 3) {
    throw std::invalid_argument("kirchhoff_identity_check: needs a three-dimensional grid");
  }
  const auto radii = v0_hat.grid().radial_frequencies();
  double worst = 0.0;
  std::vector<double> diff(radii.size()), base(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    const double lhs = std::cos(r * t);
    const double rhs = sinc(r * t) - t * t / (4.0 * pi) * r * r * ball_multiplier(3, t * r);
    worst = std::max(worst, std::abs(lhs - rhs));
    diff[k] = std::norm((lhs - rhs) * v0_hat[k]);
    base[k] = std::norm(v0_hat[k]);
  }
  const double denom = pairwise_sum(base);
  return {worst, denom > 0.0 ? std::sqrt(pairwise_sum(diff) / denom) : 0.0};
}

namespace {

template <class Weighted>
WeightedSup sampled_sup(double r_max, double step, Weighted&& weighted) {
  if (!(r_max > 0.0) || !(step > 0.0)) {
    throw std::invalid_argument("weighted sup: r_max and step must be positive");
  }
  WeightedSup best{0.0, 0.0};
  const auto count = static_cast<std::size_t>(std::ceil(r_max / step));
  for (std::size_t i = 0; i <= count; ++i) {
    const double r = std::min(r_max, static_cast<double>(i) * step);
    const double value = weighted(r);
    if (value > best.value) best = {value, r};
  }
  return best;
}

}  // namespace

WeightedSup ball_weighted_sup(int dims, double s, double r_max, double step) {
  check_dims(dims, "ball_weighted_sup");
  return sampled_sup(r_max, step, [&](double r) {
    return std::pow(1.0 + r, s) * std::abs(chi_ball_hat(dims, r));
  });
}

WeightedSup cube_axis_weighted_sup(int dims, double s, double r_max, double step) {
  check_dims(dims, "cube_axis_weighted_sup");
  std::vector<double> xi(static_cast<std::size_t>(dims), 0.0);
  return sampled_sup(r_max, step, [&](double r) {
    xi[0] = r;
    return std::pow(1.0 + r, s) * std::abs(chi_cube_hat(xi));
  });
}

}  // namespace wavelab
