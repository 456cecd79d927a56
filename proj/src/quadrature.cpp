#include "ordermap/quadrature.hpp"

#include <cmath>
#include <limits>

namespace ordermap::quadrature {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// |a - b| / |a| for two scaled values, evaluated in the larger scale.
double relative_gap(const ScaledValue& a, const ScaledValue& b) {
  const double scale = std::max(a.log_scale, b.log_scale);
  const Complex va = a.mantissa * std::exp(a.log_scale - scale);
  const Complex vb = b.mantissa * std::exp(b.log_scale - scale);
  const double denom = std::abs(va);
  if (denom == 0.0) return std::abs(vb) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(va - vb) / denom;
}

}  // namespace

Complex ScaledValue::value() const {
  if (mantissa == Complex{}) return {};
  return mantissa * std::exp(log_scale);
}

double ScaledValue::log_abs() const {
  const double m = std::abs(mantissa);
  return m == 0.0 ? kNegInf : std::log(m) + log_scale;
}

ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
  return {a.mantissa * b.mantissa, a.log_scale + b.log_scale};
}

void LogSumAccumulator::add(Complex log_term) {
  const double re = log_term.real();
  if (!(re > kNegInf)) return;
  if (re > scale_) {
    mantissa_ *= std::exp(scale_ - re);
    scale_ = re;
  }
  mantissa_ += std::exp(log_term - scale_);
}

ScaledValue LogSumAccumulator::result() const {
  if (!(scale_ > kNegInf)) return {};
  return {mantissa_, scale_};
}

HalfLineResult integrate_half_line(const std::function<Complex(double)>& log_integrand,
                                   const HalfLineOptions& options) {
  const double log_center = std::log(options.center);
  // log of integrand * dx/ds at node s.
  auto log_node = [&](double s) -> Complex {
    const double arg = kHalfPi * std::sinh(s);
    const double log_x = log_center + arg;
    if (log_x > 700.0 || log_x < -700.0) return kNegInf;
    const double x = std::exp(log_x);
    return log_integrand(x) + log_x + std::log(kHalfPi * std::cosh(s));
  };

  double h = 0.5;
  LogSumAccumulator acc;
  int half_count = static_cast<int>(std::round(options.s_max / h));
  for (int i = -half_count; i <= half_count; ++i) acc.add(log_node(i * h));
  int nodes = 2 * half_count + 1;

  HalfLineResult result;
  ScaledValue previous = acc.result();
  previous.log_scale += std::log(h);

  for (int level = 1;; ++level) {
    const int next_nodes = 2 * nodes - 1;
    if (next_nodes > options.max_nodes) break;
    h *= 0.5;
    half_count *= 2;
    for (int i = -half_count + 1; i < half_count; i += 2) acc.add(log_node(i * h));
    nodes = next_nodes;

    ScaledValue current = acc.result();
    current.log_scale += std::log(h);
    const double gap = relative_gap(current, previous);
    result.integral = current;
    result.rel_err = gap;
    result.nodes = nodes;
    if (!std::isfinite(current.mantissa.real()) || !std::isfinite(current.mantissa.imag())) {
      result.converged = false;
      return result;
    }
    if (level >= 2 && gap <= options.rel_tol) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  if (result.nodes == 0) {
    result.integral = previous;
    result.nodes = nodes;
  }

  // Endpoint weight relative to the total.
  const double total_log = result.integral.log_abs() - std::log(h);
  const double edge_log =
      std::max(log_node(options.s_max).real(), log_node(-options.s_max).real());
  result.tails_decay = !(edge_log > total_log + std::log(options.rel_tol) - 5.0);
  if (!result.tails_decay) result.converged = false;
  return result;
}

double find_log_peak(const std::function<Complex(double)>& log_integrand, double lo,
                     double hi) {
  constexpr int kSamples = 161;
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / (kSamples - 1);
  double best_x = 1.0;
  double best = kNegInf;
  for (int i = 0; i < kSamples; ++i) {
    const double x = std::exp(llo + i * step);
    const double v = log_integrand(x).real();
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace ordermap::quadrature
