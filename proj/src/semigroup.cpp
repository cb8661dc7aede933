#include "wavelab/semigroup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wavelab/norms.hpp"

namespace wavelab {

double modal_inner_product(const ModeSystem& modes, const ModalState& w, const ModalState& z) {
  require_matching(modes, w, "modal_inner_product");
  require_matching(modes, z, "modal_inner_product");
  std::vector<double> terms(modes.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    terms[j] = (1.0 + modes.eigenvalue(j)) * w.u[j] * z.u[j] + w.v[j] * z.v[j];
  }
  return pairwise_sum(terms);
}

double modal_norm(const ModeSystem& modes, const ModalState& w) {
  return std::sqrt(modal_inner_product(modes, w, w));
}

ModalState apply_generator(const ModeSystem& modes, const ModalState& w) {
  require_matching(modes, w, "apply_generator");
  auto out = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    out.u[j] = w.v[j];
    out.v[j] = -modes.eigenvalue(j) * w.u[j];
  }
  return out;
}

ModalState apply_generator_adjoint(const ModeSystem& modes, const ModalState& z) {
  require_matching(modes, z, "apply_generator_adjoint");
  auto out = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double mu = modes.eigenvalue(j);
    out.u[j] = (1.0 / (1.0 + mu) - 1.0) * z.v[j];
    out.v[j] = (1.0 + mu) * z.u[j];
  }
  return out;
}

double adjoint_residual(const ModeSystem& modes, const ModalState& w, const ModalState& z) {
  return std::abs(modal_inner_product(modes, apply_generator(modes, w), z) -
                  modal_inner_product(modes, w, apply_generator_adjoint(modes, z)));
}

double adjoint_injectivity_margin(const ModeSystem& modes) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double mu = modes.eigenvalue(j);
    // det [[0, 1/(1+mu) - 1], [1+mu, 0]] = -(1+mu)(1/(1+mu) - 1) = mu
    const double det = -(1.0 + mu) * (1.0 / (1.0 + mu) - 1.0);
    margin = std::min(margin, std::abs(det));
  }
  return margin;
}

ModalState resolvent_apply(const ModeSystem& modes, double lambda, const ModalState& rhs) {
  if (!(lambda > 0.0)) throw std::invalid_argument("resolvent_apply: lambda must be positive");
  require_matching(modes, rhs, "resolvent_apply");
  auto out = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double mu = modes.eigenvalue(j);
    out.u[j] = (lambda * rhs.u[j] + rhs.v[j]) / (lambda * lambda + mu);
    out.v[j] = lambda * out.u[j] - rhs.u[j];
  }
  return out;
}

ModalState shifted_generator_apply(const ModeSystem& modes, double lambda, const ModalState& w) {
  require_matching(modes, w, "shifted_generator_apply");
  auto out = ModalState::zeros(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    out.u[j] = lambda * w.u[j] - w.v[j];
    out.v[j] = lambda * w.v[j] + modes.eigenvalue(j) * w.u[j];
  }
  return out;
}

double resolvent_block_norm(double lambda, double mu) {
  // R = [[lambda, 1], [-mu, lambda]] / (lambda^2 + mu); in the symmetrized
  // variables (sqrt(1+mu) u, v) it becomes [[a, b], [c, d]] below.
  const double denom = lambda * lambda + mu;
  const double root = std::sqrt(1.0 + mu);
  const double a = lambda / denom;
  const double b = root / denom;
  const double c = -mu / root / denom;
  const double d = lambda / denom;
  // Largest singular value of a real 2x2 matrix.
  return 0.5 * (std::hypot(a + d, c - b) + std::hypot(a - d, b + c));
}

ResolventNorm resolvent_norm(const ModeSystem& modes, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("resolvent_norm: lambda must be positive");
  ResolventNorm result{0.0, 0, std::nullopt, false};
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double value = resolvent_block_norm(lambda, modes.eigenvalue(j));
    if (value > result.value) {
      result.value = value;
      result.worst_mode = j;
    }
  }
  if (lambda > 0.5) {
    result.bound = 1.0 / (lambda - 0.5);
    result.within_bound = result.value <= *result.bound;
  }
  return result;
}

ConservationWitness conserved_functional_probe(const ModeSystem& modes, const ModalState& z,
                                               std::size_t max_trials) {
  require_matching(modes, z, "conserved_functional_probe");
  const std::size_t limit = max_trials == 0 ? 2 * modes.size() : max_trials;
  std::size_t trials = 0;
  for (std::size_t j = 0; j < modes.size() && trials < limit; ++j) {
    const double mu = modes.eigenvalue(j);
    // p = e_v: A p = (1, 0) in mode j, so <A p, z> = (1 + mu) chi_j.
    const double from_velocity = (1.0 + mu) * z.u[j];
    ++trials;
    if (from_velocity != 0.0) return {true, j, 1, from_velocity};
    if (trials >= limit) break;
    // p = e_u: A p = (0, -mu), so <A p, z> = -mu psi_j.
    const double from_position = -mu * z.v[j];
    ++trials;
    if (from_position != 0.0) return {true, j, 0, from_position};
  }
  return {false};
}

double energy_rate(const ModeSystem& modes, const ModalState& w) {
  require_matching(modes, w, "energy_rate");
  const auto aw = apply_generator(modes, w);
  std::vector<double> terms(modes.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    terms[j] = modes.eigenvalue(j) * w.u[j] * aw.u[j] + w.v[j] * aw.v[j];
  }
  return pairwise_sum(terms);
}

}  // namespace wavelab
