#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "wavelab/energy.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/propagators.hpp"
#include "wavelab/quadrature.hpp"
#include "wavelab/random.hpp"
#include "wavelab/sphere_rules.hpp"

using namespace wavelab;
using std::numbers::pi;

namespace {

SpectralField sampled(const GridSpec& grid, const std::function<double(double)>& f) {
  return forward_transform(RealField::sample(grid, [&](std::span<const double> x) { return f(x[0]); }));
}

StateVector noise_state(const GridSpec& grid, Rng& rng) {
  std::vector<double> u(grid.size()), v(grid.size());
  for (double& x : u) x = rng.normal();
  for (double& x : v) x = rng.normal();
  return StateVector(forward_transform(RealField(grid, u)), forward_transform(RealField(grid, v)));
}

double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("plane waves propagate with the dispersion relation") {
  const double L = 2.0 * pi;
  const auto grid = make_grid(1, L, 32);
  const double k = 3.0;
  const auto u0 = sampled(grid, [k](double x) { return std::cos(k * x); });
  const auto v0 = sampled(grid, [k](double x) { return std::sin(k * x); });
  for (double t : {0.0, 0.3, 1.7, -2.2}) {
    const auto w = propagate_fourier(u0, v0, t);
    const auto u = inverse_transform(w.u);
    const auto v = inverse_transform(w.v);
    for (int i = 0; i < grid.points(); i += 5) {
      const double x = grid.coordinate(i);
      const double exact_u = std::cos(k * x) * std::cos(k * t) + std::sin(k * x) * std::sin(k * t) / k;
      const double exact_v = -k * std::cos(k * x) * std::sin(k * t) + std::sin(k * x) * std::cos(k * t);
      CHECK(u[i] == doctest::Approx(exact_u).epsilon(1e-13));
      CHECK(v[i] == doctest::Approx(exact_v).epsilon(1e-13));
    }
  }
}

TEST_CASE("zero frequency grows linearly") {
  const auto grid = make_grid(2, 4.0, 8);
  const auto zero = SpectralField::zeros(grid);
  const auto c = sampled(grid, [](double) { return 0.5; });
  const auto u = inverse_transform(propagate_fourier(zero, c, 3.0).u);
  CHECK(u[7] == doctest::Approx(1.5));
}

TEST_CASE("group law and time reversal hold per mode") {
  Rng rng(5);
  const auto grid = make_grid(2, 10.0, 16);
  for (int trial = 0; trial < 5; ++trial) {
    const auto w = noise_state(grid, rng);
    const double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
    const auto two_steps = propagate_fourier(propagate_fourier(w, s), t);
    const auto one_step = propagate_fourier(w, s + t);
    CHECK(max_diff(two_steps.u, one_step.u) < 1e-12);
    CHECK(max_diff(two_steps.v, one_step.v) < 1e-12);
    const auto reversed = flip_velocity(propagate_fourier(flip_velocity(w), t));
    const auto backward = propagate_fourier(w, -t);
    CHECK(max_diff(reversed.u, backward.u) < 1e-12);
    CHECK(max_diff(reversed.v, backward.v) < 1e-12);
  }
}

TEST_CASE("generator applies (v, Laplacian u)") {
  const auto grid = make_grid(1, 20.0, 64);
  const auto u = sampled(grid, [](double x) { return std::exp(-x * x); });
  const auto v = sampled(grid, [](double x) { return x * std::exp(-x * x); });
  const auto a = apply_generator(StateVector(u, v));
  CHECK(max_diff(a.u, v) == 0.0);
  CHECK(max_diff(a.v, laplacian(u)) == 0.0);
  // d/dt T(t) w at t = 0 equals A w.
  const double h = 1e-5;
  const auto plus = propagate_fourier(StateVector(u, v), h), minus = propagate_fourier(StateVector(u, v), -h);
  CHECK(max_diff((0.5 / h) * (plus.u - minus.u), a.u) < 1e-8);
}

TEST_CASE("causal window bookkeeping") {
  const auto grid = make_grid(1, 40.0, 64);
  const StateVector w(SpectralField::zeros(grid), SpectralField::zeros(grid));
  const auto inside = propagate_fourier_run(w, 5.0, 3.0, 2.0);
  CHECK(inside.causal_limit == doctest::Approx(15.0));
  CHECK_FALSE(inside.beyond_causal_window);
  CHECK(propagate_fourier_run(w, 16.0, 3.0, 2.0).beyond_causal_window);
}

TEST_CASE("d'Alembert formula against closed form") {
  const ScalarFunction u0 = [](double x) { return std::exp(-x * x); };
  const ScalarFunction v0 = [](double x) { return std::cos(x); };
  for (double x : {-2.0, 0.0, 0.4, 3.1}) {
    for (double t : {0.0, 0.5, 2.0}) {
      const double exact = 0.5 * (u0(x + t) + u0(x - t)) + 0.5 * (std::sin(x + t) - std::sin(x - t));
      CHECK(propagate_dalembert(u0, v0, x, t) == doctest::Approx(exact).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(propagate_dalembert(u0, v0, 0.0, -1.0), std::invalid_argument);
  // A jump in v0 handled by a breakpoint.
  const ScalarFunction step = [](double x) { return x > 0.2 ? 1.0 : 0.0; };
  DalembertOptions options;
  options.v0_breakpoints = {0.2};
  const ScalarFunction zero = [](double) { return 0.0; };
  CHECK(propagate_dalembert(zero, step, 0.0, 1.0, options) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("Kirchhoff formula on exact solutions") {
  // v0 = 1 gives u = t; u0 = |x|^2 gives u = |x|^2 + 3 t^2; v0 = xyz gives t xyz.
  const KirchhoffData constant{{}, {}, [](double, double, double) { return 1.0; }};
  CHECK(propagate_kirchhoff(constant, {0.3, 0.1, -2.0}, 1.7).value == doctest::Approx(1.7).epsilon(1e-13));

  const Function3 quad = [](double x, double y, double z) { return x * x + y * y + z * z; };
  const Function3 zero = [](double, double, double) { return 0.0; };
  const KirchhoffData with_gradient{quad,
                                    [](double x, double y, double z) {
                                      return std::array<double, 3>{2 * x, 2 * y, 2 * z};
                                    },
                                    zero};
  const KirchhoffData without_gradient{quad, {}, zero};
  const std::array<double, 3> p{0.5, -1.0, 0.25};
  const double exact = 0.25 + 1.0 + 0.0625 + 3.0 * 0.81;
  CHECK(propagate_kirchhoff(with_gradient, p, 0.9).value == doctest::Approx(exact).epsilon(1e-12));
  CHECK(propagate_kirchhoff(without_gradient, p, 0.9).value == doctest::Approx(exact).epsilon(1e-8));

  const KirchhoffData harmonic{{}, {}, [](double x, double y, double z) { return x * y * z; }};
  CHECK(propagate_kirchhoff(harmonic, p, 2.0).value == doctest::Approx(2.0 * p[0] * p[1] * p[2]).epsilon(1e-12));
  CHECK_THROWS_AS(propagate_kirchhoff(constant, p, 0.0), std::invalid_argument);
}

TEST_CASE("Kirchhoff formula against the radial closed form") {
  // v0 = exp(-|x|^2): u(r, t) = (exp(-(r - t)^2) - exp(-(r + t)^2)) / (4 r).
  const KirchhoffData data{{}, {}, [](double x, double y, double z) { return std::exp(-(x * x + y * y + z * z)); }};
  for (double t : {0.5, 1.5, 3.0}) {
    const std::array<double, 3> p{0.6, 0.0, 0.8};
    const double r = 1.0;
    const double exact = (std::exp(-(r - t) * (r - t)) - std::exp(-(r + t) * (r + t))) / (4.0 * r);
    const auto result = propagate_kirchhoff(data, p, t);
    CHECK(result.converged);
    CHECK(result.value == doctest::Approx(exact).epsilon(1e-8));
  }
}

TEST_CASE("sphere rule refinement ladder") {
  CHECK(next_sphere_order(17) == 35);
  CHECK(next_sphere_order(35) == 71);
  CHECK(next_sphere_order(71) == 131);
  CHECK(next_sphere_order(131) == 263);
  CHECK(next_sphere_order(263) == 527);
}

TEST_CASE("sphere rules integrate polynomials exactly") {
  for (int order : lebedev_orders()) {
    const auto rule = SphereRule::lebedev(order);
    double total = 0.0;
    for (const auto& p : rule.points()) total += p.weight;
    CHECK(total == doctest::Approx(4.0 * pi).epsilon(1e-13));
    // int z^2 = 4 pi / 3; odd monomials vanish.
    if (order >= 3) {
      CHECK(rule.integrate([](double, double, double z) { return z * z; }) ==
            doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
      CHECK(std::abs(rule.integrate([](double x, double y, double z) { return x * y * z * z; })) < 1e-14);
    }
  }
  // int x^4 y^4 z^2 dS over S^2 = 4 pi * 3 * 3 * 1 / (3*5*7*9*11*13)... via the
  // moment formula 2 Gamma(5/2)^2 Gamma(3/2) / Gamma(13/2).
  const double moment = 2.0 * std::tgamma(2.5) * std::tgamma(2.5) * std::tgamma(1.5) / std::tgamma(6.5);
  auto f = [](double x, double y, double z) { return std::pow(x, 4) * std::pow(y, 4) * z * z; };
  CHECK(SphereRule::lebedev(11).integrate(f) == doctest::Approx(moment).epsilon(1e-13));
  CHECK(SphereRule::product(11).integrate(f) == doctest::Approx(moment).epsilon(1e-13));
  CHECK_FALSE(SphereRule::at_least(200).is_lebedev());
  CHECK(SphereRule::at_least(200).order() >= 200);
  CHECK(SphereRule::at_least(12).order() == 17);
  CHECK_THROWS(SphereRule::lebedev(13));
}

TEST_CASE("one-dimensional quadrature") {
  CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12).value ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  const auto singular = integrate_endpoint_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(singular.converged);
  CHECK(singular.value == doctest::Approx(2.0).epsilon(1e-11));
  const auto oscillatory = integrate_panels([](double x) { return std::sin(x) * std::sin(x); }, 0.0, 100.0 * pi, pi, 1e-12);
  CHECK(oscillatory.value == doctest::Approx(50.0 * pi).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY, 1e-12).value ==
        doctest::Approx(1.0).epsilon(1e-11));
  const double kink[] = {0.3};
  CHECK(integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-13, kink).value ==
        doctest::Approx(0.29).epsilon(1e-13));
  const auto gl = gauss_legendre(5);
  double moment = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) moment += gl.weights[i] * std::pow(gl.nodes[i], 8);
  CHECK(moment == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("eigenfunction propagation") {
  const auto modes = ModeSystem::interval(pi, 8);
  CHECK(modes.eigenvalue(2) == doctest::Approx(9.0));
  std::vector<double> u0(8, 0.0), v0(8, 0.0);
  u0[1] = 1.0;
  v0[2] = 3.0;
  const double t = 0.7;
  const auto w = propagate_eigen(modes, u0, v0, t);
  CHECK(w.u[1] == doctest::Approx(std::cos(2.0 * t)));
  CHECK(w.v[1] == doctest::Approx(-2.0 * std::sin(2.0 * t)));
  CHECK(w.u[2] == doctest::Approx(std::sin(3.0 * t)));
  CHECK(w.v[2] == doctest::Approx(3.0 * std::cos(3.0 * t)));
  CHECK(w.u[0] == 0.0);
  const ModalState initial{u0, v0};
  CHECK(energy(modes, w) == doctest::Approx(energy(modes, initial)).epsilon(1e-14));
}

TEST_CASE("mode systems") {
  const auto box = ModeSystem::box({1.0, 2.0}, {3, 4}, {-0.5, -1.0});
  CHECK(box.size() == 12);
  CHECK(box.multi_index(5) == std::vector<int>{2, 2});
  CHECK(box.eigenvalue(5) == doctest::Approx(pi * pi * (4.0 + 1.0)));
  const double inside[2] = {0.1, 0.3}, outside[2] = {0.6, 0.0};
  CHECK(box.eigenfunction(0, outside) == 0.0);
  const double expected = std::sqrt(2.0) * std::cos(pi * 0.1) * std::sqrt(1.0) * std::sin(pi * 1.3 / 2.0);
  CHECK(box.eigenfunction(0, inside) == doctest::Approx(expected));
  const auto sorted = box.sorted_eigenvalues();
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST_CASE("reconcile flags probes outside the causal window") {
  const Representation a = [](std::span<const double> x, double t) { return x[0] + t; };
  const Representation b = [](std::span<const double> x, double t) { return x[0] + t + 1e-9; };
  const std::vector<Probe> probes{{{0.0}, 1.0}, {{1.0}, 19.0}};
  const auto report = reconcile(a, b, probes, {CausalWindow{40.0, 2.0}, 0.0});
  CHECK(report.columns() == std::vector<std::string>{"x0", "t", "value_A", "value_B", "abs_err", "rel_err", "causal_flag"});
  CHECK(report.column("causal_flag") == std::vector<double>{0.0, 1.0});
  CHECK(report.summary_value("outside_count") == 1.0);
  CHECK(report.summary_value("max_abs_err") == doctest::Approx(1e-9).epsilon(1e-6));
}
