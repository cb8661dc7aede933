#pragma once

#include <cstddef>
#include <optional>

#include "wavelab/modes.hpp"

namespace wavelab {

// Mode by mode, with mu = lambda_j the Dirichlet eigenvalue, the wave
// generator acts on (u_j, v_j) as the 2x2 block [[0, 1], [-mu, 0]] and the
// phase-space inner product is sum_j ((1 + mu) u_j p_j + v_j q_j).

/// Modal phase-space inner product.
double modal_inner_product(const ModeSystem& modes, const ModalState& w, const ModalState& z);
double modal_norm(const ModeSystem& modes, const ModalState& w);

/// (u_j, v_j) -> (v_j, -mu u_j).
ModalState apply_generator(const ModeSystem& modes, const ModalState& w);

/// Adjoint with respect to the phase-space inner product:
/// (chi_j, psi_j) -> ((1/(1+mu) - 1) psi_j, (1 + mu) chi_j).
ModalState apply_generator_adjoint(const ModeSystem& modes, const ModalState& z);

/// |<A w, z> - <w, A* z>|.
double adjoint_residual(const ModeSystem& modes, const ModalState& w, const ModalState& z);

/// Smallest |det| over the adjoint's 2x2 blocks (det = mu); a positive value
/// certifies that the truncated adjoint is one-to-one.
double adjoint_injectivity_margin(const ModeSystem& modes);

/// Solves (lambda I - A)(u, v) = (f, g): u_j = (lambda f_j + g_j)/(lambda^2 + mu),
/// v_j = lambda u_j - f_j. The right-hand side is passed as a ModalState with
/// u = f and v = g. Throws std::invalid_argument for lambda <= 0.
ModalState resolvent_apply(const ModeSystem& modes, double lambda, const ModalState& rhs);

/// (lambda I - A) w.
ModalState shifted_generator_apply(const ModeSystem& modes, double lambda, const ModalState& w);

/// Norm of one resolvent block in the weighted norm (1+mu) u^2 + v^2, i.e.
/// the spectral norm of diag(sqrt(1+mu), 1) R diag(sqrt(1+mu), 1)^{-1}.
double resolvent_block_norm(double lambda, double mu);

struct ResolventNorm {
  double value;             ///< sup over modes of the block norms
  std::size_t worst_mode;   ///< mode attaining the sup
  std::optional<double> bound;  ///< 1/(lambda - 1/2), present for lambda > 1/2
  bool within_bound;        ///< value <= bound (false when no bound is claimed)
};

/// Throws std::invalid_argument for lambda <= 0.
ResolventNorm resolvent_norm(const ModeSystem& modes, double lambda);

struct ConservationWitness {
  bool found;
  std::size_t mode = 0;
  int component = 0;        ///< 0: p = e_u of the mode, 1: p = e_v
  double derivative = 0.0;  ///< <A p, z>
};

/// Searches basis states p for d/dt <T(t) p, z> at t = 0, i.e. <A p, z>,
/// nonzero. For z = 0 nothing is found. At most max_trials basis states are
/// tried (0 means all).
ConservationWitness conserved_functional_probe(const ModeSystem& modes, const ModalState& z,
                                               std::size_t max_trials = 0);

/// E'(w)(A w) = sum_j (mu u_j v_j + v_j (-mu u_j)); zero for every w.
double energy_rate(const ModeSystem& modes, const ModalState& w);

}  // namespace wavelab
