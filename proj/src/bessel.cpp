#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Finite-difference stencils around |nu| = 10 need a little room.
constexpr double kOrderMargin = 0.5;
constexpr int kMaxSeriesTerms = 500;

double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (std::abs(r) == 0.5) return 0.0;
  return std::cos(kPi * r);
}

void check_order(double nu) {
  if (!std::isfinite(nu) || std::abs(nu) > kMaxOrder + kOrderMargin) {
    throw DomainError(fmt::format("order {} outside [-{}, {}]", nu, kMaxOrder, kMaxOrder));
  }
}

void check_positive_argument(double z) {
  if (!(z > 0.0) || z > kMaxArgument) {
    throw DomainError(fmt::format("argument {} outside (0, {}]", z, kMaxArgument));
  }
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  double magnitude = 0.0;

  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    magnitude += std::abs(x);
  }
  double value() const { return sum + carry; }
};

// sum_k (-1)^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1)), z > 0 or integer nu >= 0.
EvalResult ascending_series(double nu, double z) {
  const double half = 0.5 * z;
  const double q = -half * half;
  double term = std::pow(half, nu) * rgamma(nu + 1.0);
  CompensatedSum acc;
  int k = 0;
  for (; k < kMaxSeriesTerms; ++k) {
    acc.add(term);
    const bool decreasing = (k + 1) * std::abs(nu + k + 1) > -q;
    if (decreasing && std::abs(term) <= 1e-17 * std::abs(acc.value())) break;
    if (term == 0.0 && decreasing) break;
    term *= q / ((k + 1) * (nu + k + 1));
  }
  if (k == kMaxSeriesTerms) {
    throw ConvergenceError(fmt::format("J series for nu={}, z={} did not settle", nu, z));
  }
  return {acc.value(), 4.0 * kEps * acc.magnitude + std::abs(term), k + 1};
}

}  // namespace

Order::Order(double nu) : nu_(nu), n_(0), frac_(0.0) {
  if (!std::isfinite(nu)) throw DomainError("non-finite order");
  const double fl = std::floor(nu);
  n_ = static_cast<int>(fl);
  frac_ = nu - fl;
}

EvalResult bessel_j(Order order, double z) {
  check_order(order.nu());
  if (!std::isfinite(z) || std::abs(z) > kMaxArgument) {
    throw DomainError(fmt::format("argument {} outside [-{}, {}]", z, kMaxArgument, kMaxArgument));
  }
  if (order.is_integer()) {
    const int n = order.n();
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    if (n < 0) {
      EvalResult r = bessel_j(Order::integer(-n), z);
      r.value *= parity;
      return r;
    }
    if (z < 0.0) {
      EvalResult r = bessel_j(order, -z);
      r.value *= parity;
      return r;
    }
    if (z == 0.0) return {n == 0 ? 1.0 : 0.0, 0.0, 1};
    return ascending_series(order.nu(), z);
  }
  if (z < 0.0) {
    throw DomainError(fmt::format("J_nu at negative argument {} for non-integer nu={}", z,
                                  order.nu()));
  }
  if (z == 0.0) {
    if (order.nu() > 0.0) return {0.0, 0.0, 1};
    throw DomainError(fmt::format("J_nu singular at z = 0 for nu={}", order.nu()));
  }
  return ascending_series(order.nu(), z);
}

EvalResult neumann_log_series(int n, double z) {
  check_positive_argument(z);
  if (n < 0) {
    EvalResult r = neumann_log_series(-n, z);
    if (n % 2 != 0) r.value = -r.value;
    return r;
  }
  const double half = 0.5 * z;
  const double log_half = std::log(half);

  // -(1/pi) sum_{k<n} (n-k-1)!/k! (z/2)^{2k-n}
  CompensatedSum finite;
  {
    double fact_nk1 = 1.0;  // (n-1)! built below
    for (int i = 2; i < n; ++i) fact_nk1 *= i;
    double fact_k = 1.0;
    for (int k = 0; k < n; ++k) {
      finite.add(fact_nk1 / fact_k * std::pow(half, 2 * k - n));
      if (n - k - 1 > 0) fact_nk1 /= (n - k - 1);
      fact_k *= (k + 1);
    }
  }

  // J_n and the digamma-weighted companion, psi(m+1) = -gamma + H_m.
  CompensatedSum jn;
  CompensatedSum psi_part;
  double harmonic_k = 0.0;
  double harmonic_nk = 0.0;
  for (int i = 1; i <= n; ++i) harmonic_nk += 1.0 / i;
  double term = std::pow(half, n);
  for (int i = 2; i <= n; ++i) term /= i;
  const double q = -half * half;
  int k = 0;
  for (; k < kMaxSeriesTerms; ++k) {
    jn.add(term);
    const double psi_sum = (harmonic_k - kEulerGamma) + (harmonic_nk - kEulerGamma);
    psi_part.add(psi_sum * term);
    const bool decreasing = (k + 1) * (n + k + 1) > -q;
    if (decreasing && std::abs(term) * (1.0 + std::abs(psi_sum)) <=
                          1e-17 * std::abs(psi_part.value() + jn.value())) {
      break;
    }
    term *= q / ((k + 1.0) * (n + k + 1.0));
    harmonic_k += 1.0 / (k + 1);
    harmonic_nk += 1.0 / (n + k + 1);
  }
  if (k == kMaxSeriesTerms) {
    throw ConvergenceError(fmt::format("log series for N_{}({}) did not settle", n, z));
  }
  const double value =
      (-finite.value() + 2.0 * log_half * jn.value() - psi_part.value()) / kPi;
  const double mag =
      (finite.magnitude + 2.0 * std::abs(log_half) * jn.magnitude + psi_part.magnitude) / kPi;
  return {value, 8.0 * kEps * mag, k + 1 + n};
}

EvalResult neumann(Order order, double z) {
  check_order(order.nu());
  check_positive_argument(z);
  if (!order.is_integer()) {
    const double nu = order.nu();
    const double s = sin_pi(nu);
    const double c = cos_pi(nu);
    const EvalResult jp = bessel_j(order, z);
    const EvalResult jm = bessel_j(order.negated(), z);
    const double value = (jp.value.real() * c - jm.value.real()) / s;
    const double err = (std::abs(c) * jp.err_estimate + jm.err_estimate) / std::abs(s) +
                       kEps * std::abs(value);
    return {value, err, jp.effort + jm.effort};
  }

  // Symmetric average cancels odd powers of eps; Richardson removes eps^2.
  const double n = order.nu();
  int effort = 0;
  auto symmetric = [&](double eps) {
    const EvalResult up = neumann(Order(n + eps), z);
    const EvalResult dn = neumann(Order(n - eps), z);
    effort += up.effort + dn.effort;
    return 0.5 * (up.value.real() + dn.value.real());
  };
  const double coarse = symmetric(1e-3);
  const double fine = symmetric(5e-4);
  const double value = (4.0 * fine - coarse) / 3.0;
  const EvalResult oracle = neumann_log_series(order.n(), z);
  const double err = std::abs(value - oracle.value.real()) + oracle.err_estimate;
  return {value, err, effort};
}

EvalResult hankel(int kind, Order order, double z) {
  if (kind != 1 && kind != 2) throw DomainError(fmt::format("Hankel kind {} not in {{1, 2}}", kind));
  const EvalResult j = bessel_j(order, z);
  const EvalResult y = neumann(order, z);
  const double sign = kind == 1 ? 1.0 : -1.0;
  return {Complex(j.value.real(), sign * y.value.real()), j.err_estimate + y.err_estimate,
          j.effort + y.effort};
}

double reduced_j_normalized(int n, double z) {
  if (n < 0) throw DomainError(fmt::format("normalised reduced J needs n >= 0, got {}", n));
  if (!std::isfinite(z) || std::abs(z) > kMaxArgument) {
    throw DomainError(fmt::format("argument {} outside [-{}, {}]", z, kMaxArgument, kMaxArgument));
  }
  const double q = -0.25 * z * z;
  double term = 1.0;
  CompensatedSum acc;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    acc.add(term);
    const bool decreasing = (k + 1.0) * (n + k + 1.0) > -q;
    if (decreasing && std::abs(term) <= 1e-17 * std::abs(acc.value())) return acc.value();
    term *= q / ((k + 1.0) * (n + k + 1.0));
  }
  throw ConvergenceError(fmt::format("normalised J series n={}, z={} did not settle", n, z));
}

std::vector<double> neumann_power_normalized(double t, int m_max) {
  check_positive_argument(t);
  if (m_max < 0) throw DomainError("m_max must be >= 0");
  std::vector<double> y(static_cast<std::size_t>(m_max) + 1);
  y[0] = 0.5 * neumann(Order::integer(0), t).value.real();
  if (m_max == 0) return y;
  y[1] = 0.25 * t * neumann(Order::integer(1), t).value.real();
  const double t2 = t * t;
  for (int m = 1; m < m_max; ++m) {
    y[m + 1] = (static_cast<double>(m) / (m + 1)) * y[m] - t2 / (4.0 * m * (m + 1)) * y[m - 1];
  }
  return y;
}

}  // namespace ordermap::specfun
