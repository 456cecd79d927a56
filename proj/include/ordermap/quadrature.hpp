#pragma once

// Log-scaled quadrature helpers shared by the K evaluator and the generating
// pair engine. Values are carried as mantissa * exp(log_scale) so that
// integrals such as t^{n-1} K_{n-1}(t) for n ~ 200 stay representable.

#include <complex>
#include <functional>
#include <limits>

namespace ordermap::quadrature {

using Complex = std::complex<double>;

struct ScaledValue {
  Complex mantissa{};
  double log_scale = 0.0;

  Complex value() const;
  /// log|value|; -inf for zero.
  double log_abs() const;
};

ScaledValue operator*(const ScaledValue& a, const ScaledValue& b);

/// Running sum of exp(log_term), rescaled whenever a larger term arrives.
class LogSumAccumulator {
 public:
  void add(Complex log_term);
  ScaledValue result() const;
  double max_log() const { return scale_; }

 private:
  Complex mantissa_{};
  double scale_ = -std::numeric_limits<double>::infinity();
};

struct HalfLineOptions {
  double rel_tol = 1e-10;
  int max_nodes = 1 << 14;
  double center = 1.0;
  double s_max = 4.0;
};

struct HalfLineResult {
  ScaledValue integral;
  double rel_err = 0.0;
  int nodes = 0;
  bool converged = false;
  bool tails_decay = true;
};

/// int_0^inf exp(log_integrand(x)) dx with the exp-sinh map
///   x = center * exp((pi/2) sinh s),  s in [-s_max, s_max],
/// trapezoid in s, step halved until successive levels agree to rel_tol or
/// the node budget is exhausted. tails_decay is false when the endpoint
/// nodes still carry weight (a divergent integrand).
HalfLineResult integrate_half_line(const std::function<Complex(double)>& log_integrand,
                                   const HalfLineOptions& options = {});

/// Location of the largest Re log_integrand on a log-spaced grid in [lo, hi].
double find_log_peak(const std::function<Complex(double)>& log_integrand, double lo = 1e-8,
                     double hi = 1e8);

}  // namespace ordermap::quadrature
