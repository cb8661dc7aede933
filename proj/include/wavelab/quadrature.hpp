#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace wavelab {

using ScalarFunction = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  bool converged = false;
};

/// Raised when an adaptive rule cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Adaptive 61-point Gauss-Kronrod on [a, b] (b may be +infinity). Interior
/// breakpoints split the range so that kinks and jumps sit on panel edges.
/// Convergence means total error <= rel_tol * integral of |f| over [a, b].
QuadratureResult integrate(const ScalarFunction& f, double a, double b, double rel_tol,
                           std::span<const double> breakpoints = {});

/// tanh-sinh on [a, b]; suited to integrable endpoint singularities.
QuadratureResult integrate_endpoint_singular(const ScalarFunction& f, double a, double b,
                                             double rel_tol);

/// Integrates over consecutive panels [a, a+w], [a+w, a+2w], ... up to b,
/// for long oscillatory ranges.
QuadratureResult integrate_panels(const ScalarFunction& f, double a, double b, double panel_width,
                                  double rel_tol);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int count);

}  // namespace wavelab
