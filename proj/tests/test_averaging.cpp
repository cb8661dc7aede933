#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "wavelab/averaging.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/quadrature.hpp"
#include "wavelab/radial.hpp"

using namespace wavelab;
using std::numbers::pi;

namespace {

double gaussian3(double x, double y, double z) { return std::exp(-0.5 * (x * x + y * y + z * z)); }

SpectralField gaussian_spectrum(const GridSpec& grid) {
  return forward_transform(RealField::sample(grid, [](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return std::exp(-0.5 * r2);
  }));
}

}  // namespace

TEST_CASE("indicator transforms") {
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(pi));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0));
  for (int n = 1; n <= 3; ++n) {
    CHECK(chi_ball_hat(n, 0.0) == doctest::Approx(std::pow(2.0 * pi, -0.5 * n) * ball_volume(n)).epsilon(1e-15));
    CHECK(chi_ball_hat(n, 1e-9) == doctest::Approx(chi_ball_hat(n, 0.0)).epsilon(1e-12));
  }
  for (double r : {0.3, 2.0, 17.5}) {
    CHECK(chi_ball_hat(1, r) == doctest::Approx(2.0 * std::sin(r) / r / std::sqrt(2.0 * pi)).epsilon(1e-13));
    const double b3 = 4.0 * pi * (std::sin(r) - r * std::cos(r)) / (r * r * r);
    CHECK(chi_ball_hat(3, r) == doctest::Approx(b3 * std::pow(2.0 * pi, -1.5)).epsilon(1e-12));
    CHECK(sphere_multiplier(3, r) == doctest::Approx(4.0 * pi * std::sin(r) / r).epsilon(1e-14));
    CHECK(sphere_multiplier(1, r) == doctest::Approx(2.0 * std::cos(r)).epsilon(1e-14));
  }
  const double zero[3] = {0.0, 0.0, 0.0};
  CHECK(chi_cube_hat(zero) == doctest::Approx(8.0 * std::pow(2.0 * pi, -1.5)));
  const double axis[2] = {1.0, 0.0};
  CHECK(chi_cube_hat(axis) == doctest::Approx(4.0 / (2.0 * pi) * std::sin(1.0)));
}

TEST_CASE("ball symbol is the radial integral of the sphere symbol") {
  // N_1 = int_0^1 s^{n-1} M_s ds, so ball(r) = int_0^1 s^{n-1} sphere(s r) ds.
  for (int n = 1; n <= 3; ++n) {
    for (double r : {0.5, 4.0, 30.0}) {
      const auto q = integrate([&](double s) { return std::pow(s, n - 1) * sphere_multiplier(n, s * r); }, 0.0, 1.0, 1e-13);
      CHECK(ball_multiplier(n, r) == doctest::Approx(q.value).epsilon(1e-10));
    }
  }
}

TEST_CASE("spherical mean of a Gaussian") {
  // Mean over |y - x| = t of exp(-|y|^2/2) is (e^{-(r-t)^2/2} - e^{-(r+t)^2/2}) / (2 r t).
  const std::array<double, 3> x{0.6, -0.2, 0.9};
  const double r = std::sqrt(0.36 + 0.04 + 0.81);
  for (double t : {0.3, 1.0, 2.5}) {
    const double mean = (std::exp(-0.5 * (r - t) * (r - t)) - std::exp(-0.5 * (r + t) * (r + t))) / (2.0 * r * t);
    CHECK(sphere_average_at(gaussian3, x, t) == doctest::Approx(4.0 * pi * mean).epsilon(1e-10));
  }
  CHECK_THROWS_AS(sphere_average_at(gaussian3, x, -1.0), std::invalid_argument);
}

TEST_CASE("multiplier and quadrature paths agree") {
  const auto grid = make_grid(3, 20.0, 48);
  const auto F = gaussian_spectrum(grid);
  for (double t : {0.5, 2.0}) {
    const auto ball = ball_average(F, t);
    const auto sphere = sphere_average(F, t);
    for (const auto& x : {std::array<double, 3>{0.0, 0.0, 0.0}, std::array<double, 3>{1.1, -0.4, 0.25}}) {
      const double p[3] = {x[0], x[1], x[2]};
      CHECK(evaluate_at(ball, p) == doctest::Approx(ball_average_at(gaussian3, x, t)).epsilon(1e-8));
      CHECK(evaluate_at(sphere, p) == doctest::Approx(sphere_average_at(gaussian3, x, t)).epsilon(1e-8));
    }
  }
  // Normalized averages fix constants: the zero frequency is untouched.
  CHECK(normalized_ball_average(F, 3.0)[0].real() == doctest::Approx(F[0].real()).epsilon(1e-14));
  CHECK(normalized_sphere_average(F, 3.0)[0].real() == doctest::Approx(F[0].real()).epsilon(1e-14));
  CHECK_THROWS_AS(ball_average(F, 0.0), std::invalid_argument);
}

TEST_CASE("Kirchhoff identity holds to roundoff") {
  const auto grid = make_grid(3, 20.0, 32);
  const auto v0 = gaussian_spectrum(grid);
  for (double t : {0.25, 1.0, 6.0}) {
    const auto r = kirchhoff_identity_check(v0, t);
    CHECK(r.max_multiplier_residual <= 1e-10);
    CHECK(r.field_residual <= 1e-10);
  }
  CHECK_THROWS_AS(kirchhoff_identity_check(gaussian_spectrum(make_grid(2, 20.0, 32)), 1.0), std::invalid_argument);
}

TEST_CASE("smoothing ratios sit below the operator norm") {
  const auto grid = make_grid(3, 4.0 * pi, 32);
  CorpusSpec spec;
  spec.count = 6;
  spec.seed = 5;
  const auto corpus = band_limited_corpus(grid, spec);
  REQUIRE(corpus.size() == 6);
  for (const auto& f : corpus) {
    CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_conjugate_symmetric(f));
    for (double t : {0.2, 1.0, 3.0}) {
      CHECK(smoothing_ratio(f, t) <= smoothing_operator_norm(3, t, 2.0) * (1.0 + 1e-3));
    }
  }
  // Same seed, same corpus.
  const auto again = band_limited_corpus(grid, spec);
  CHECK(again[2][7] == corpus[2][7]);
}

TEST_CASE("weighted sups of ball and cube transforms") {
  // In R^3 the ball transform decays like r^{-2}: bounded with weight (1+r)^2.
  const auto near = ball_weighted_sup(3, 2.0, 100.0);
  const auto far = ball_weighted_sup(3, 2.0, 1000.0);
  CHECK(far.value <= near.value * 1.05);
  // The cube transform decays only like r^{-1} along an axis.
  const auto c1 = cube_axis_weighted_sup(3, 1.1, 100.0);
  const auto c2 = cube_axis_weighted_sup(3, 1.1, 1000.0);
  CHECK(c2.value > c1.value * 1.05);
  CHECK(c2.argmax > 100.0);
}
