#include "wavelab/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavelab {

ModeSystem::ModeSystem(std::vector<double> lengths, std::vector<int> caps,
                       std::vector<double> lower)
    : lengths_(std::move(lengths)), caps_(std::move(caps)), lower_(std::move(lower)) {
  if (lengths_.empty() || lengths_.size() > 3) {
    throw std::invalid_argument("ModeSystem: 1 to 3 axes required");
  }
  if (caps_.size() != lengths_.size()) {
    throw std::invalid_argument("ModeSystem: one mode cap per axis required");
  }
  if (lower_.empty()) lower_.assign(lengths_.size(), 0.0);
  if (lower_.size() != lengths_.size()) {
    throw std::invalid_argument("ModeSystem: one lower corner coordinate per axis required");
  }
  std::size_t count = 1;
  for (std::size_t d = 0; d < lengths_.size(); ++d) {
    if (!(lengths_[d] > 0.0) || !std::isfinite(lengths_[d])) {
      throw std::invalid_argument("ModeSystem: side lengths must be positive");
    }
    if (caps_[d] < 1) throw std::invalid_argument("ModeSystem: mode caps must be >= 1");
    count *= static_cast<std::size_t>(caps_[d]);
  }
  eigenvalues_.resize(count);
  for (std::size_t mode = 0; mode < count; ++mode) {
    const auto k = multi_index(mode);
    double lambda = 0.0;
    for (std::size_t d = 0; d < lengths_.size(); ++d) {
      const double w = k[d] * std::numbers::pi / lengths_[d];
      lambda += w * w;
    }
    eigenvalues_[mode] = lambda;
  }
}

ModeSystem ModeSystem::interval(double length, int cap, double lower) {
  return ModeSystem({length}, {cap}, {lower});
}

ModeSystem ModeSystem::box(std::vector<double> lengths, std::vector<int> caps,
                           std::vector<double> lower) {
  return ModeSystem(std::move(lengths), std::move(caps), std::move(lower));
}

std::vector<double> ModeSystem::sorted_eigenvalues() const {
  auto sorted = eigenvalues_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::vector<int> ModeSystem::multi_index(std::size_t mode) const {
  std::vector<int> k(caps_.size());
  for (int d = static_cast<int>(caps_.size()) - 1; d >= 0; --d) {
    k[d] = static_cast<int>(mode % caps_[d]) + 1;
    mode /= caps_[d];
  }
  return k;
}

double ModeSystem::eigenfunction(std::size_t mode, std::span<const double> x) const {
  const auto k = multi_index(mode);
  double value = 1.0;
  for (std::size_t d = 0; d < lengths_.size(); ++d) {
    const double s = x[d] - lower_[d];
    if (s <= 0.0 || s >= lengths_[d]) return 0.0;
    value *= std::sqrt(2.0 / lengths_[d]) * std::sin(k[d] * std::numbers::pi * s / lengths_[d]);
  }
  return value;
}

void require_matching(const ModeSystem& modes, const ModalState& state, const char* what) {
  if (state.u.size() != modes.size() || state.v.size() != modes.size()) {
    throw std::invalid_argument(std::string(what) + ": modal state has " +
                                std::to_string(state.u.size()) + "/" +
                                std::to_string(state.v.size()) + " coefficients for " +
                                std::to_string(modes.size()) + " modes");
  }
}

}  // namespace wavelab
