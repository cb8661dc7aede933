#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "wavelab/energy.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/propagators.hpp"
#include "wavelab/quadrature.hpp"
#include "wavelab/radial.hpp"
#include "wavelab/random.hpp"

using namespace wavelab;
using std::numbers::pi;

namespace {

StateVector smooth_state(const GridSpec& grid, Rng& rng) {
  // Random superposition of a few Gaussians: smooth, decaying, nonzero.
  std::vector<double> c(8);
  for (double& x : c) x = rng.uniform(-2.0, 2.0);
  auto field = [&](int offset) {
    return forward_transform(RealField::sample(grid, [&](std::span<const double> x) {
      double r2a = 0.0, r2b = 0.0;
      for (std::size_t d = 0; d < x.size(); ++d) {
        r2a += (x[d] - c[offset]) * (x[d] - c[offset]);
        r2b += (x[d] + c[offset + 1]) * (x[d] + c[offset + 1]);
      }
      return c[offset + 2] * std::exp(-r2a) + c[offset + 3] * std::exp(-0.5 * r2b);
    }));
  };
  return StateVector(field(0), field(4));
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
  return out;
}

}  // namespace

TEST_CASE("energy of Gaussian data matches closed form") {
  const auto grid = make_grid(1, 40.0, 256);
  const auto u = forward_transform(RealField::sample(grid, [](std::span<const double> x) { return std::exp(-0.5 * x[0] * x[0]); }));
  // ||u'||^2 = sqrt(pi)/2, ||v||^2 = sqrt(pi)/4 for v = u / 2.
  const StateVector w(u, 0.5 * u);
  CHECK(energy(w) == doctest::Approx(0.5 * (std::sqrt(pi) / 2.0 + std::sqrt(pi) / 4.0)).epsilon(1e-12));
}

TEST_CASE("energy is conserved and the growth bound dominates") {
  Rng rng(17);
  const auto grid = make_grid(2, 24.0, 64);
  for (int trial = 0; trial < 6; ++trial) {
    const auto w = smooth_state(grid, rng);
    const std::vector<double> times{0.5, 3.0, 17.0, 250.0};
    CHECK(energy_drift(w, times) <= 1e-12);
    CHECK(growth_bound(w, 0.0) == doctest::Approx(std::pow(l2_norm(w.u), 2)).epsilon(1e-14));
    for (double t : times) {
      const double norm = l2_norm(propagate_fourier(w, t).u);
      CHECK(norm * norm <= growth_bound(w, t) * (1.0 + 1e-9));
    }
    CHECK(growth_identity_check(w, 2.3).relative_error <= 1e-6);
  }
  const auto modes = ModeSystem::box({1.0, 2.5}, {30, 30});
  auto state = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    state.u[j] = rng.normal() / (1.0 + j);
    state.v[j] = rng.normal();
  }
  const std::vector<double> times{0.1, 10.0, 1000.0};
  CHECK(energy_drift(modes, state, times) <= 1e-12);
}

TEST_CASE("growth exponent fits") {
  GrowthSeries power;
  power.times = logspace(0.0, 3.0, 31);
  for (double t : power.times) power.values.push_back(2.0 * std::pow(t, 0.75));
  auto fit = fit_growth_exponent(power);
  CHECK(fit.slope == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK_FALSE(fit.flagged);
  // Default window: two decades ending at the largest time.
  CHECK(fit.points == 21);

  GrowthSeries flat;
  flat.times = logspace(0.0, 2.0, 11);
  flat.values.assign(11, 3.0);
  CHECK(fit_growth_exponent(flat).slope == doctest::Approx(0.0));

  GrowthSeries wobbly = power;
  for (std::size_t i = 0; i < wobbly.values.size(); ++i) wobbly.values[i] *= (i % 2 ? 3.0 : 0.3);
  CHECK(fit_growth_exponent(wobbly).flagged);

  GrowthSeries bad = power;
  bad.values[25] = 0.0;
  CHECK_THROWS_AS(fit_growth_exponent(bad), std::invalid_argument);
  bad = power;
  std::swap(bad.times[3], bad.times[4]);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  const auto report = power.to_report();
  CHECK(report.columns() == std::vector<std::string>{"t", "value", "bound", "ratio"});
  CHECK(std::isnan(report.column("bound")[0]));
}

TEST_CASE("radial growth example") {
  // eps = 1/2, t = 1: int_0^1 (sin s / s)^2 ds = Si(2) - sin(1)^2.
  const double si2 = 1.6054129768026948;
  const double inner = si2 - std::sin(1.0) * std::sin(1.0);
  CHECK(radial_growth_example(0.5, 1.0) == doctest::Approx(std::sqrt(4.0 * pi * inner)).epsilon(1e-10));

  for (double eps : {0.1, 0.25, 0.4}) {
    const auto series = radial_growth_series(eps, logspace(2.0, 4.0, 21));
    CHECK(fit_growth_exponent(series).slope == doctest::Approx(1.0 - eps).epsilon(0.02 / (1.0 - eps)));
    // The closed form and the generic radial quadrature are independent paths.
    for (double t : {3.0, 250.0}) {
      CHECK(radial_solution_norm(radial_growth_spectrum(eps), t) ==
            doctest::Approx(radial_growth_example(eps, t)).epsilon(1e-8));
    }
    // ||v0||^2 = 4 pi / (2 eps).
    CHECK(radial_l2_norm(radial_growth_spectrum(eps)) == doctest::Approx(std::sqrt(2.0 * pi / eps)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(radial_growth_example(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_growth_example(0.6, 1.0), std::invalid_argument);
}

TEST_CASE("modulated growth reduces to the plain power and stays sandwiched") {
  for (double t : {0.5, 7.0, 900.0}) {
    const double base = radial_growth_example(0.3, t);
    CHECK(modulated_growth_norm(0.3, 0.0, 2.0, t) == doctest::Approx(base).epsilon(1e-9));
    const double m = modulated_growth_norm(0.3, 0.6, 3.0, t);
    CHECK(m >= std::sqrt(0.4) * base * (1.0 - 1e-9));
    CHECK(m <= std::sqrt(1.6) * base * (1.0 + 1e-9));
  }
}

TEST_CASE("sub-quadratic decay on radial Gaussian data") {
  // int_0^inf e^{-r^2} sin^2(r t) dr = sqrt(pi)/4 (1 - e^{-t^2}).
  const RadialSpectrum gaussian{3, [](double r) { return std::exp(-0.5 * r * r); }, 9.0, false};
  const std::vector<double> times{0.5, 2.0, 40.0};
  const auto series = subquadratic_check(gaussian, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const double exact = std::sqrt(4.0 * pi * std::sqrt(pi) / 4.0 * (1.0 - std::exp(-t * t))) / t;
    CHECK(series.values[i] == doctest::Approx(exact).epsilon(1e-9));
  }

  // The lattice sum agrees with the radial integral on a large box.
  const auto grid = make_grid(3, 40.0, 64);
  const auto lattice = synthesize_radial_spectrum(grid, [](double r) { return std::exp(-0.5 * r * r); }, 1.0);
  const std::vector<double> t2{2.0};
  CHECK(subquadratic_check(lattice, t2).values[0] == doctest::Approx(series.values[1]).epsilon(1e-8));
}

TEST_CASE("gapped spectra obey the orbit bound") {
  const auto grid = make_grid(2, 30.0, 64);
  const double gap = 0.8;
  const auto v0 = synthesize_radial_spectrum(grid, [gap](double r) { return r >= gap && r < 2.5 ? std::cos(r) + 1.5 : 0.0; });
  const auto times = logspace(-1.0, 2.0, 40);
  const double ratio = gapped_orbit_ratio(v0, gap, times);
  CHECK(ratio > 0.1);
  CHECK(ratio <= 1.0);
}

TEST_CASE("odd-power velocity") {
  const double alpha = 1.25;
  CHECK(odd_power_velocity(alpha, 0.5) == 0.0);
  CHECK(odd_power_velocity(alpha, -2.0) == doctest::Approx(-std::pow(2.0, -alpha)));
  CHECK_THROWS_AS(odd_power_velocity(1.5, 2.0), std::invalid_argument);

  // u(x, t) = (V(x + t) - V(x - t)) / 2 with the closed-form antiderivative
  // V(y) = (|y|^{1-alpha} - 1)/(1 - alpha) for |y| > 1, 0 otherwise; u is odd.
  auto V = [alpha](double y) {
    const double a = std::abs(y);
    return a > 1.0 ? (std::pow(a, 1.0 - alpha) - 1.0) / (1.0 - alpha) : 0.0;
  };
  for (double t : {2.0, 5.0}) {
    auto u2 = [&](double x) {
      const double u = 0.5 * (V(x + t) - V(x - t));
      return u * u;
    };
    const double far = 1e7;
    const double breaks[] = {1.0, std::abs(t - 1.0), t + 1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6};
    const auto body = integrate(u2, 0.0, far, 1e-12, breaks);
    // Beyond far, u ~ t x^{-alpha}.
    const double tail = t * t * std::pow(far, 1.0 - 2.0 * alpha) / (2.0 * alpha - 1.0);
    const double exact = std::sqrt(2.0 * (body.value + tail));
    CHECK(odd_power_norm(alpha, t) == doctest::Approx(exact).epsilon(1e-6));
    CHECK(odd_power_lower_bound(alpha, t) <= 4.0 * exact * exact);
  }
}
