#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wavelab/exhaustion.hpp"
#include "wavelab/random.hpp"

using namespace wavelab;

TEST_CASE("sine projection and synthesis are inverse") {
  Rng rng(21);
  for (int dims : {1, 2}) {
    BoxSamples box{dims, 2.0, 0.125, {}};
    const int m = box.interior_points();
    CHECK(m == 31);
    box.values.resize(dims == 1 ? m : m * m);
    for (double& v : box.values) v = rng.normal();
    const auto coeffs = project_onto_modes(box);
    CHECK(coeffs.size() == box.values.size());
    const auto back = synthesize_from_modes(dims, 2.0, 0.125, coeffs);
    double err = 0.0;
    for (std::size_t i = 0; i < back.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - box.values[i]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("a sampled eigenfunction projects onto one mode") {
  const double j = 1.5, dx = 0.1;
  const auto modes = box_mode_system(1, j, dx);
  BoxSamples box{1, j, dx, {}};
  REQUIRE(modes.size() == static_cast<std::size_t>(box.interior_points()));
  for (std::size_t k : {0u, 4u, 27u}) {
    box.values.clear();
    for (int i = 1; i <= box.interior_points(); ++i) {
      const double x[1] = {-j + i * dx};
      box.values.push_back(modes.eigenfunction(k, x));
    }
    const auto c = project_onto_modes(box);
    for (std::size_t m = 0; m < c.size(); ++m) CHECK(c[m] == doctest::Approx(m == k ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("extension by zero") {
  const auto host = make_grid(1, 8.0, 64);
  BoxSamples box{1, 1.0, 0.125, {}};
  for (int i = 1; i <= box.interior_points(); ++i) box.values.push_back(i);
  const auto f = extend_by_zero(box, host);
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = host.coordinate(static_cast<int>(i));
    if (std::abs(x) >= 1.0 - 1e-12) CHECK(f[i] == 0.0);
    total += f[i];
  }
  CHECK(total == doctest::Approx(15.0 * 16.0 / 2.0));
  // The node at x = -1 + dx holds the first sample.
  CHECK(f[static_cast<std::size_t>((-1.0 + 0.125 + 4.0) / 0.125 + 0.5)] == 1.0);

  BoxSamples skewed{1, 1.05, 0.125, std::vector<double>(15, 1.0)};
  CHECK_THROWS_AS(extend_by_zero(skewed, host), std::invalid_argument);
  BoxSamples big{1, 5.0, 0.125, std::vector<double>(79, 1.0)};
  CHECK_THROWS_AS(extend_by_zero(big, host), std::invalid_argument);
}

TEST_CASE("small exhaustion run in one dimension") {
  ExhaustionConfig config = default_exhaustion_config(1);
  config.box_length = 32.0;
  config.points = 1024;
  config.sigma = 0.2;
  config.domains = {3.0, 5.0, 9.0};
  for (int i = 0; i <= 24; ++i) config.times.push_back(0.25 * i);
  const auto outcome = exhaustion_experiment(config);
  CHECK(outcome.causal_ok);
  CHECK(outcome.monotone_ok);
  CHECK(outcome.projection_ok);
  CHECK(outcome.energy_ok);
  CHECK(outcome.reference_check < 1e-8);
  CHECK(outcome.data_radius == doctest::Approx(effective_data_radius(0.2)));
  REQUIRE(outcome.domains.size() == 3);
  for (const auto& d : outcome.domains) CHECK(d.max_causal_error <= config.causal_tolerance);
  // The largest box stays exact over the whole window.
  CHECK(outcome.domains.back().max_error <= config.causal_tolerance);
  CHECK(outcome.report.columns().size() == 6);

  config.domains = {3.05};
  CHECK_THROWS_AS(exhaustion_experiment(config), std::invalid_argument);
  CHECK_THROWS_AS(default_exhaustion_config(3), std::invalid_argument);
}
