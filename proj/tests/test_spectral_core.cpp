#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>
#include <sstream>

#include "wavelab/field_io.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/radial.hpp"
#include "wavelab/random.hpp"
#include "wavelab/report.hpp"

using namespace wavelab;
using std::numbers::pi;

namespace {

RealField gaussian(const GridSpec& grid, double sigma = 1.0) {
  return RealField::sample(grid, [sigma](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return std::exp(-0.5 * r2 / (sigma * sigma));
  });
}

RealField noise(const GridSpec& grid, Rng& rng) {
  std::vector<double> s(grid.size());
  for (double& v : s) v = rng.normal();
  return RealField(grid, std::move(s));
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(make_grid(1, 10.0, 63), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 10.0, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 10.0, 8), std::invalid_argument);

  const auto g = make_grid(2, 2.0 * pi, 16);
  CHECK(g.size() == 256);
  CHECK(g.frequency_spacing() == doctest::Approx(1.0));
  CHECK(g.wavenumber(7) == 7);
  CHECK(g.wavenumber(8) == -8);
  CHECK(g.is_nyquist(8));
  CHECK(g.flatten(g.unflatten(37)) == 37);
  CHECK(causal_time_limit(make_grid(1, 40.0, 64), 3.0, 2.0) == doctest::Approx(15.0));
}

TEST_CASE("transform of a Gaussian is a Gaussian") {
  // Unitary convention: exp(-|x|^2/2) maps to exp(-|xi|^2/2) in every dimension.
  for (int n = 1; n <= 3; ++n) {
    const auto grid = n == 3 ? make_grid(3, 20.0, 48) : make_grid(n, 30.0, 128);
    const auto spectrum = forward_transform(gaussian(grid));
    const auto radii = grid.radial_frequencies();
    double err = 0.0;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
      const double exact = std::exp(-0.5 * radii[k] * radii[k]);
      err = std::max(err, std::abs(spectrum[k] - exact));
    }
    CHECK(err < 1e-12);
  }
}

TEST_CASE("Plancherel and round trip on white noise") {
  Rng rng(11);
  for (int n = 1; n <= 3; ++n) {
    const auto grid = make_grid(n, 2.0 * pi, n == 3 ? 16 : 32);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = noise(grid, rng);
      const auto F = forward_transform(f);
      CHECK(l2_norm(F) == doctest::Approx(l2_norm(f)).epsilon(1e-13));
      CHECK(is_conjugate_symmetric(F));
      const auto back = inverse_transform(F);
      double err = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
      CHECK(err < 1e-13);
    }
  }
}

TEST_CASE("mirror index is an involution onto -k") {
  const auto grid = make_grid(2, 1.0, 8);
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const auto m = mirror_index(grid, flat);
    CHECK(mirror_index(grid, m) == flat);
    const auto a = grid.unflatten(flat), b = grid.unflatten(m);
    for (int d = 0; d < 2; ++d) {
      if (!grid.is_nyquist(a[d])) CHECK(grid.wavenumber(b[d]) == -grid.wavenumber(a[d]));
    }
  }
}

TEST_CASE("trigonometric interpolation is exact off the grid") {
  const double L = 10.0;
  const auto grid = make_grid(1, L, 32);
  const double k = 2.0 * pi * 3.0 / L;
  auto f = [k](double x) { return std::cos(k * x) + 0.5 * std::sin(2.0 * k * x); };
  const auto F = forward_transform(RealField::sample(grid, [&](std::span<const double> x) { return f(x[0]); }));
  for (double x : {-4.9, -1.234, 0.0, 0.777, 4.5}) {
    const double p[1] = {x};
    CHECK(evaluate_at(F, p) == doctest::Approx(f(x)).epsilon(1e-13));
  }
  // Grid points reproduce the samples.
  const auto g = gaussian(make_grid(2, 20.0, 32));
  const auto G = forward_transform(g);
  const auto idx = g.grid().flatten({5, 17, 0});
  const double p[2] = {g.grid().coordinate(5), g.grid().coordinate(17)};
  CHECK(evaluate_at(G, p) == doctest::Approx(g[idx]).epsilon(1e-12));
}

TEST_CASE("spectral derivative and Laplacian of a Gaussian") {
  const auto grid = make_grid(2, 30.0, 128);
  const auto F = forward_transform(gaussian(grid));
  const auto dx = inverse_transform(derivative(F, 0));
  const auto lap = inverse_transform(laplacian(F));
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto idx = grid.unflatten(i);
    const double x = grid.coordinate(idx[0]), y = grid.coordinate(idx[1]);
    const double g = std::exp(-0.5 * (x * x + y * y));
    e1 = std::max(e1, std::abs(dx[i] + x * g));
    e2 = std::max(e2, std::abs(lap[i] - (x * x + y * y - 2.0) * g));
  }
  CHECK(e1 < 1e-12);
  CHECK(e2 < 1e-11);
  CHECK_THROWS_AS(derivative(F, 2), std::invalid_argument);
}

TEST_CASE("Sobolev norms of a Gaussian match closed forms") {
  const auto grid = make_grid(1, 40.0, 256);
  const auto F = forward_transform(gaussian(grid));
  // int e^{-xi^2} = sqrt(pi), int xi^2 e^{-xi^2} = sqrt(pi)/2, int xi^4 e^{-xi^2} = 3 sqrt(pi)/4.
  // (Odd s is avoided: the kink of |xi| at 0 costs O(dxi^2) in the lattice sum.)
  const double sp = std::sqrt(pi);
  CHECK(l2_norm(F) == doctest::Approx(std::sqrt(sp)).epsilon(1e-12));
  CHECK(h1_seminorm(F) == doctest::Approx(std::sqrt(sp / 2.0)).epsilon(1e-12));
  CHECK(hs_norm(F, 2.0) == doctest::Approx(std::sqrt(sp * (1.0 + 1.0 + 0.75))).epsilon(1e-12));
  CHECK(hs_norm(F, 0.0) == doctest::Approx(2.0 * l2_norm(F)).epsilon(1e-14));
  CHECK_THROWS_AS(hs_norm(F, -0.5), std::invalid_argument);
  CHECK(h1_seminorm(gaussian(grid)) == doctest::Approx(h1_seminorm(F)).epsilon(1e-14));
}

TEST_CASE("phase inner product matches a direct sum") {
  const auto grid = make_grid(1, 30.0, 256);
  auto u = [](double x) { return std::exp(-0.5 * x * x); };
  auto du = [](double x) { return -x * std::exp(-0.5 * x * x); };
  auto p = [](double x) { return x * std::exp(-0.5 * (x - 1.0) * (x - 1.0)); };
  auto dp = [](double x) { return (1.0 - x * (x - 1.0)) * std::exp(-0.5 * (x - 1.0) * (x - 1.0)); };
  auto v = [](double x) { return std::exp(-x * x); };
  auto q = [](double x) { return std::cos(x) * std::exp(-0.25 * x * x); };
  auto field = [&](auto f) {
    return forward_transform(RealField::sample(grid, [&](std::span<const double> x) { return f(x[0]); }));
  };
  double direct = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double x = grid.coordinate(i);
    direct += (u(x) * p(x) + du(x) * dp(x) + v(x) * q(x)) * grid.spacing();
  }
  const StateVector w(field(u), field(v)), z(field(p), field(q));
  CHECK(phase_inner_product(w, z) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(phase_norm(w) * phase_norm(w) == doctest::Approx(phase_inner_product(w, w)).epsilon(1e-14));
}

TEST_CASE("pairwise sum is accurate and order-fixed") {
  std::vector<double> v(10001);
  long double exact = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = 1.0 / (1.0 + i);
    exact += v[i];
  }
  CHECK(pairwise_sum(v) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-15));
  CHECK(pairwise_sum(v) == pairwise_sum(v));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}

TEST_CASE("radial synthesis keeps the origin value and rejects non-finite profiles") {
  const auto grid = make_grid(3, 2.0 * pi, 8);
  const auto F = synthesize_radial_spectrum(grid, [](double r) { return 1.0 / r; }, 5.0);
  CHECK(F[0] == Complex(5.0, 0.0));
  const auto radii = grid.radial_frequencies();
  for (std::size_t k = 1; k < F.size(); ++k) CHECK(F[k].real() == doctest::Approx(1.0 / radii[k]));
  CHECK(is_conjugate_symmetric(F));
  CHECK(synthesize_radial_spectrum(grid, [](double r) { return 1.0 / r; })[0] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(synthesize_radial_spectrum(grid, [](double r) { return r > 1.5 ? std::nan("") : 1.0; }),
                  std::invalid_argument);
}

TEST_CASE("spectral tail fraction separates smooth from rough data") {
  const auto grid = make_grid(1, 20.0, 128);
  CHECK(spectral_tail_fraction(forward_transform(gaussian(grid))) < 1e-12);
  const auto step = RealField::sample(grid, [](std::span<const double> x) { return x[0] > 0 ? 1.0 : 0.0; });
  CHECK(spectral_tail_fraction(forward_transform(step)) > 1e-4);
}

TEST_CASE("field container round trip") {
  const auto grid = make_grid(2, 6.0, 8);
  Rng rng(3);
  const auto f = noise(grid, rng);
  std::stringstream buffer;
  write_field_binary(buffer, f);
  CHECK(buffer.str().size() == 32 + 8 * grid.size());
  const auto back = std::get<RealField>(read_field_binary(buffer));
  CHECK(back.grid() == grid);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);

  std::stringstream spectral;
  write_field_binary(spectral, forward_transform(f));
  const auto F = std::get<SpectralField>(read_field_binary(spectral));
  CHECK(F[3] == forward_transform(f)[3]);

  std::stringstream truncated(buffer.str().substr(0, 40));
  CHECK_THROWS_AS(read_field_binary(truncated), std::runtime_error);
  std::stringstream garbage("not a field container at all....");
  CHECK_THROWS_AS(read_field_binary(garbage), std::runtime_error);

  std::ostringstream csv;
  write_field_csv(csv, f);
  CHECK(csv.str().rfind("x0,x1,value\n", 0) == 0);
  CHECK_THROWS_AS(write_field_csv(csv, f, 10), std::invalid_argument);
}

TEST_CASE("report CSV is round-trip exact") {
  ExperimentReport report("r", {"a", "b"});
  report.add_row({0.1, 1.0 / 3.0});
  report.set_summary("k", 2.0);
  report.set_summary("k", 3.0);
  std::ostringstream out;
  report.write_csv(out);
  CHECK(out.str() == "a,b\n0.10000000000000001,0.33333333333333331\n");
  CHECK(report.summary_value("k") == 3.0);
  CHECK(report.column("b")[0] == 1.0 / 3.0);
  CHECK_THROWS(report.add_row({1.0}));
  CHECK_THROWS(report.column("c"));
  CHECK(std::stod("0.33333333333333331") == 1.0 / 3.0);
}
