#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "wavelab/random.hpp"
#include "wavelab/semigroup.hpp"

using namespace wavelab;
using std::numbers::pi;

namespace {

ModalState random_state(std::size_t n, Rng& rng) {
  auto w = ModalState::zeros(n);
  for (std::size_t j = 0; j < n; ++j) {
    w.u[j] = rng.normal() / (1.0 + j);
    w.v[j] = rng.normal();
  }
  return w;
}

// Largest singular value of a 2x2 matrix by power iteration on M^T M.
double sigma_max(double a, double b, double c, double d) {
  double x = 1.0, y = 0.3;
  for (int i = 0; i < 2000; ++i) {
    const double p = a * x + b * y, q = c * x + d * y;
    const double nx = a * p + c * q, ny = b * p + d * q;
    const double n = std::hypot(nx, ny);
    x = nx / n;
    y = ny / n;
  }
  return std::hypot(a * x + b * y, c * x + d * y);
}

}  // namespace

TEST_CASE("generator adjoint identity") {
  Rng rng(2);
  const auto modes = ModeSystem::interval(pi, 64);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_state(modes.size(), rng), z = random_state(modes.size(), rng);
    const double scale = modal_norm(modes, apply_generator(modes, w)) * modal_norm(modes, z) + 1.0;
    CHECK(adjoint_residual(modes, w, z) <= 1e-12 * scale);
    CHECK(energy_rate(modes, w) == doctest::Approx(0.0).scale(1.0));
  }
  // On [0, pi] the eigenvalues are k^2, the smallest determinant is 1.
  CHECK(adjoint_injectivity_margin(modes) == doctest::Approx(1.0));
  const auto w = random_state(modes.size(), rng);
  CHECK(modal_norm(modes, w) * modal_norm(modes, w) == doctest::Approx(modal_inner_product(modes, w, w)));
}

TEST_CASE("resolvent is a two-sided inverse") {
  Rng rng(4);
  const auto modes = ModeSystem::box({pi, 2.0}, {20, 20});
  for (double lambda : {0.3, 1.0, 25.0}) {
    const auto f = random_state(modes.size(), rng);
    const auto left = shifted_generator_apply(modes, lambda, resolvent_apply(modes, lambda, f));
    const auto right = resolvent_apply(modes, lambda, shifted_generator_apply(modes, lambda, f));
    for (std::size_t j = 0; j < modes.size(); ++j) {
      CHECK(left.u[j] == doctest::Approx(f.u[j]).scale(1.0).epsilon(1e-12));
      CHECK(left.v[j] == doctest::Approx(f.v[j]).scale(1.0).epsilon(1e-12));
      CHECK(right.u[j] == doctest::Approx(f.u[j]).scale(1.0).epsilon(1e-12));
      CHECK(right.v[j] == doctest::Approx(f.v[j]).scale(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(resolvent_apply(modes, 0.0, random_state(modes.size(), rng)), std::invalid_argument);
}

TEST_CASE("resolvent block norm matches a numerical singular value") {
  for (double lambda : {0.2, 0.7, 3.0}) {
    for (double mu : {0.5, 1.0, 9.0, 400.0}) {
      // R = [[lambda, 1], [-mu, lambda]] / (lambda^2 + mu), conjugated by diag(sqrt(1+mu), 1).
      const double den = lambda * lambda + mu, s = std::sqrt(1.0 + mu);
      const double expected = sigma_max(lambda / den, s / den, -mu / (s * den), lambda / den);
      CHECK(resolvent_block_norm(lambda, mu) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("resolvent bound above one half") {
  const auto modes = ModeSystem::interval(pi, 2000);
  for (double lambda : {0.6, 1.0, 10.0}) {
    const auto r = resolvent_norm(modes, lambda);
    REQUIRE(r.bound.has_value());
    CHECK(r.within_bound);
    CHECK(r.value <= *r.bound);
    CHECK(r.value >= 1.0 / (lambda + 1.0));
  }
  const auto low = resolvent_norm(modes, 0.25);
  CHECK_FALSE(low.bound.has_value());
  CHECK_FALSE(low.within_bound);
}

TEST_CASE("no nonzero linear functional is conserved") {
  Rng rng(8);
  const auto modes = ModeSystem::interval(pi, 16);
  CHECK_FALSE(conserved_functional_probe(modes, ModalState::zeros(modes.size())).found);
  const auto z = random_state(modes.size(), rng);
  const auto witness = conserved_functional_probe(modes, z);
  REQUIRE(witness.found);
  CHECK(std::abs(witness.derivative) > 0.0);
  // The derivative is <A p, z> for the basis state it names.
  auto p = ModalState::zeros(modes.size());
  (witness.component == 0 ? p.u : p.v)[witness.mode] = 1.0;
  CHECK(modal_inner_product(modes, apply_generator(modes, p), z) == doctest::Approx(witness.derivative));
}
