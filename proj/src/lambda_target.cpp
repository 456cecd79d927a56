#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::specfun {

namespace {

constexpr double kStep = 1e-3;
constexpr double kConsistencyTol = 1e-6;
constexpr int kAnalyticTerms = 80;

using OrderFunction = std::function<Complex(double)>;

OrderFunction family_function(Family family, double probe) {
  switch (family) {
    case Family::kReducedJ:
      return [probe](double nu) {
        return bessel_j(Order(nu), probe).value / std::pow(probe, nu);
      };
    case Family::kN:
      return [probe](double nu) {
        return std::pow(probe, nu) * neumann(Order(nu), probe).value;
      };
    case Family::kH1:
      return [probe](double nu) {
        return std::pow(probe, nu) * hankel(1, Order(nu), probe).value;
      };
    case Family::kH2:
      return [probe](double nu) {
        return std::pow(probe, nu) * hankel(2, Order(nu), probe).value;
      };
  }
  throw DomainError("unknown family");
}

// Central differences at step h and h/2 combined to cancel the h^2 term.
Complex richardson_derivative(const OrderFunction& f, double center, int j) {
  auto stencil = [&](double h) -> Complex {
    if (j == 1) return (f(center + h) - f(center - h)) / (2.0 * h);
    return (f(center + h) - 2.0 * f(center) + f(center - h)) / (h * h);
  };
  return (4.0 * stencil(0.5 * kStep) - stencil(kStep)) / 3.0;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kReducedJ:
      return "reducedJ";
    case Family::kN:
      return "N";
    case Family::kH1:
      return "H1";
    case Family::kH2:
      return "H2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "reducedJ") return Family::kReducedJ;
  if (text == "N") return Family::kN;
  if (text == "H1") return Family::kH1;
  if (text == "H2") return Family::kH2;
  throw DomainError(fmt::format("unknown family '{}'", text));
}

Complex lambda_taylor_target(Family family, int n, int j, double probe) {
  if (j < 0 || j > 2) throw DomainError(fmt::format("lambda order {} not in 0..2", j));
  if (!(probe > 0.0)) throw DomainError(fmt::format("probe {} must be positive", probe));
  const OrderFunction f = family_function(family, probe);
  const double center = static_cast<double>(n);
  if (j == 0) return f(center);

  const Complex fd = richardson_derivative(f, center, j);
  if (j == 2) return 0.5 * fd;

  if (family == Family::kReducedJ && n >= 0) {
    const int K = std::max(kAnalyticTerms, n + 2);
    const Complex analytic =
        evaluate(reduced_j_order_derivative_series(n, K), Complex(0.5 * probe * probe, 0.0));
    if (std::abs(analytic - fd) > kConsistencyTol) {
      throw ConvergenceError(fmt::format(
          "order-derivative routes disagree for n={}, z={}: analytic {} vs differences {}", n,
          probe, analytic.real(), fd.real()));
    }
    return analytic;
  }
  return fd;
}

}  // namespace ordermap::specfun
