#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavelab {

/// Dirichlet eigenpairs of -Laplacian on a box prod_d (lower_d, lower_d + a_d).
///
/// Modes are indexed by k = (k_0, ..., k_{n-1}), 1 <= k_d <= cap_d, flattened
/// row-major with axis 0 slowest. Eigenfunctions are
///   prod_d sqrt(2/a_d) sin(k_d pi (x_d - lower_d) / a_d)
/// (unit L2 norm) with eigenvalues sum_d (k_d pi / a_d)^2.
class ModeSystem {
 public:
  static ModeSystem interval(double length, int cap, double lower = 0.0);
  static ModeSystem box(std::vector<double> lengths, std::vector<int> caps,
                        std::vector<double> lower = {});

  int dims() const { return static_cast<int>(lengths_.size()); }
  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<double>& lengths() const { return lengths_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<int>& caps() const { return caps_; }

  std::span<const double> eigenvalues() const { return eigenvalues_; }
  double eigenvalue(std::size_t mode) const { return eigenvalues_[mode]; }
  std::vector<double> sorted_eigenvalues() const;

  /// 1-based per-axis wavenumbers of a flat mode index.
  std::vector<int> multi_index(std::size_t mode) const;

  /// Normalized eigenfunction at x; zero outside the box.
  double eigenfunction(std::size_t mode, std::span<const double> x) const;

 private:
  ModeSystem(std::vector<double> lengths, std::vector<int> caps, std::vector<double> lower);

  std::vector<double> lengths_;
  std::vector<int> caps_;
  std::vector<double> lower_;
  std::vector<double> eigenvalues_;
};

/// Modal coordinates (u_j, v_j) of a phase-space state.
struct ModalState {
  std::vector<double> u;
  std::vector<double> v;

  static ModalState zeros(std::size_t modes) {
    return {std::vector<double>(modes, 0.0), std::vector<double>(modes, 0.0)};
  }
  std::size_t size() const { return u.size(); }
};

/// Throws std::invalid_argument unless the state has one (u, v) pair per mode.
void require_matching(const ModeSystem& modes, const ModalState& state, const char* what);

}  // namespace wavelab
