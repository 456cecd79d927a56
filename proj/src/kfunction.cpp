#include <cmath>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/quadrature.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::specfun {

EvalResult k_integral_real(double s, double t) {
  if (!(t > 0.0) || t > kMaxArgument) {
    throw DomainError(fmt::format("argument {} outside (0, {}]", t, kMaxArgument));
  }
  if (!std::isfinite(s)) throw DomainError("non-finite exponent");
  const double t2 = t * t;
  const double log_half = std::log(0.5);
  auto log_integrand = [=](double x) -> Complex {
    return -0.5 * t2 * x - 0.5 / x - s * std::log(x) + log_half;
  };
  quadrature::HalfLineOptions options;
  // Stationary point of the exponent: t^2 x^2 + 2 s x - 1 = 0.
  options.center = (std::sqrt(s * s + t2) - s) / t2;
  if (s > 0.0) options.center = 1.0 / (std::sqrt(s * s + t2) + s);
  const auto result = quadrature::integrate_half_line(log_integrand, options);
  if (!result.converged) {
    throw ConvergenceError(fmt::format(
        "K quadrature (s={}, t={}) did not settle within {} nodes (gap {:.3e})", s, t,
        options.max_nodes, result.rel_err));
  }
  const Complex value = result.integral.value();
  return {value, result.rel_err * std::abs(value), result.nodes};
}

EvalResult k_integral(int n, double t) { return k_integral_real(static_cast<double>(n), t); }

EvalResult k_bessel(Order order, double t) {
  if (std::abs(order.nu()) > kMaxOrder + 0.5) {
    throw DomainError(fmt::format("order {} outside [-{}, {}]", order.nu(), kMaxOrder, kMaxOrder));
  }
  EvalResult r = k_integral_real(order.nu() + 1.0, t);
  const double factor = std::pow(t, -order.nu());
  r.value *= factor;
  r.err_estimate *= factor;
  return r;
}

}  // namespace ordermap::specfun
