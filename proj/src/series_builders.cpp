#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::specfun {

namespace {

constexpr double kLog2 = 0.69314718055994530942;

void check_truncation(int n, int K) {
  if (K < std::abs(n) + 2) {
    throw TruncationError(fmt::format("truncation order K={} too small for n={} (need K >= {})", K,
                                  n, std::abs(n) + 2));
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// a_k = (-1)^k / (2^k k! (n+k)!), the coefficients of t^n J_n(t) on u^{n+k}.
double power_j_coefficient(int n, int k) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign / (std::ldexp(1.0, k) * factorial(k) * factorial(n + k));
}

}  // namespace

LogPowerSeries reduced_j_series(int n, int K) {
  check_truncation(n, K);
  LogPowerSeries s(VariableTag::kUofZ, K);
  if (n >= 0) {
    for (int k = 0; k <= K; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      s.add_term(k, 0, sign / (factorial(k) * factorial(n + k) * std::ldexp(1.0, n + k)));
    }
    return s;
  }
  const int m = -n;
  const double parity = (m % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; m + k <= K; ++k) s.add_term(m + k, 0, parity * power_j_coefficient(m, k));
  return s;
}

LogPowerSeries power_j_series(int n, int K) {
  check_truncation(n, K);
  LogPowerSeries s(VariableTag::kUofT, K);
  if (n >= 0) {
    for (int k = 0; n + k <= K; ++k) s.add_term(n + k, 0, power_j_coefficient(n, k));
    return s;
  }
  // t^{-m} J_{-m}(t) = (-1)^m sum_k (-1)^k u^k / (2^{m+k} k! (m+k)!)
  const int m = -n;
  const double parity = (m % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; k <= K; ++k) {
    s.add_term(k, 0, parity * power_j_coefficient(m, k) / std::ldexp(1.0, m));
  }
  return s;
}

LogPowerSeries neumann_t_series(int n, int K) {
  check_truncation(n, K);
  if (n < 0) {
    const int m = -n;
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    // t^{-m} N_{-m} = (-1)^m (2u)^{-m} t^m N_m
    return multiply_monomial(neumann_t_series(m, K + m), -m,
                             Complex(parity * std::ldexp(1.0, -m), 0.0));
  }
  LogPowerSeries s(VariableTag::kUofT, K);

  // -(1/pi) sum_{k<n} (n-k-1)!/k! 2^{n-k} u^k
  for (int k = 0; k < n; ++k) {
    s.add_term(k, 0, -factorial(n - k - 1) / factorial(k) * std::ldexp(1.0, n - k) / kPi);
  }

  // (2/pi) log(t/2) t^n J_n  and  -(1/pi) sum (psi(k+1) + psi(n+k+1)) a_k u^{n+k}
  double harmonic_k = 0.0;
  double harmonic_nk = 0.0;
  for (int i = 1; i <= n; ++i) harmonic_nk += 1.0 / i;
  for (int k = 0; n + k <= K; ++k) {
    const double a = power_j_coefficient(n, k);
    const double psi_sum = (harmonic_k - kEulerGamma) + (harmonic_nk - kEulerGamma);
    s.add_term(n + k, 1, a / kPi);
    s.add_term(n + k, 0, -kLog2 * a / kPi - psi_sum * a / kPi);
    harmonic_k += 1.0 / (k + 1);
    harmonic_nk += 1.0 / (n + k + 1);
  }
  return s;
}

LogPowerSeries hankel_t_series(int kind, int n, int K) {
  if (kind != 1 && kind != 2) throw DomainError(fmt::format("Hankel kind {} not in {{1, 2}}", kind));
  const Complex i_sign(0.0, kind == 1 ? 1.0 : -1.0);
  return add(power_j_series(n, K), scale(neumann_t_series(n, K), i_sign));
}

LogPowerSeries reduced_j_order_derivative_series(int n, int K) {
  if (n < 0) throw DomainError("order-derivative series defined for n >= 0");
  check_truncation(n, K);
  LogPowerSeries s(VariableTag::kUofZ, K);
  for (int k = 0; k <= K; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double c = sign / (factorial(k) * factorial(n + k) * std::ldexp(1.0, n + k));
    s.add_term(k, 0, c * (-digamma(n + k + 1.0) - kLog2));
  }
  return s;
}

}  // namespace ordermap::specfun
