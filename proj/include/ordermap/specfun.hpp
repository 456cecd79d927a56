#pragma once

// Reference evaluators for J, N, H^(1,2) and K at real order on the desk-scale
// domain 0 < z <= 20, |nu| <= 10, plus the series objects the order-shift
// operator acts on.

#include <complex>
#include <string_view>
#include <vector>

#include "ordermap/logseries.hpp"

namespace ordermap::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kMaxArgument = 20.0;
inline constexpr double kMaxOrder = 10.0;

/// Real order nu = n + frac with n = floor(nu), 0 <= frac < 1.
class Order {
 public:
  explicit Order(double nu);
  static Order integer(int n) { return Order(static_cast<double>(n)); }

  double nu() const { return nu_; }
  int n() const { return n_; }
  double frac() const { return frac_; }
  bool is_integer() const { return frac_ == 0.0; }
  Order negated() const { return Order(-nu_); }

 private:
  double nu_;
  int n_;
  double frac_;
};

struct EvalResult {
  Complex value;
  double err_estimate = 0.0;
  int effort = 1;  // series terms or quadrature nodes
};

// Gamma function family. Lanczos (g = 7, 9 terms) with reflection below 1/2.
Complex gamma(Complex z);
double gamma(double x);
/// 1/Gamma(x), exactly zero at the poles.
double rgamma(double x);
/// Throws DomainError at non-positive integers.
double digamma(double x);

/// Ascending series sum_k (-1)^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1)).
EvalResult bessel_j(Order order, double z);

/// Non-integer order: (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi).
/// Integer order: Richardson-extrapolated symmetric limit of the same
/// formula at n +- eps, eps in {1e-3, 5e-4}; err_estimate includes the
/// distance to neumann_log_series.
EvalResult neumann(Order order, double z);

/// Textbook logarithmic series for integer order (independent oracle).
EvalResult neumann_log_series(int n, double z);

/// kind 1: J + iN, kind 2: J - iN.
EvalResult hankel(int kind, Order order, double z);

/// (1/2) int_0^inf exp(-t^2 x/2 - 1/(2x)) x^{-n} dx  ==  t^{n-1} K_{n-1}(t),
/// double-exponential quadrature with node doubling. The decaying exponent is
/// used; the printed +t^2 x/2 makes the integral diverge for real t.
EvalResult k_integral(int n, double t);
/// Real-exponent form of k_integral.
EvalResult k_integral_real(double s, double t);
/// K_nu(t) = t^{-nu} k_integral_real(nu + 1, t).
EvalResult k_bessel(Order order, double t);

// Normalised sequences for long partial sums (n up to a few hundred) where the
// raw values overflow or underflow.

/// R_n(z) = 2^n n! J_n(z) / z^n  (R_n(0) = 1), n >= 0.
double reduced_j_normalized(int n, double z);
/// Y^_m(t) = t^m N_m(t) / (2^{m+1} m!) for m = 0..m_max by forward recurrence
/// seeded from neumann(); Y^_{m+1} = m/(m+1) Y^_m - t^2/(4m(m+1)) Y^_{m-1}.
std::vector<double> neumann_power_normalized(double t, int m_max);

// Series objects in u = z^2/2 (or t^2/2).

/// J_n(z)/z^n; u^k coefficient (-1)^k / (k! (n+k)! 2^{n+k}). Negative n via
/// J_{-m}(z) z^m = (-1)^m z^m J_m(z).
LogPowerSeries reduced_j_series(int n, int K);
/// t^n J_n(t) = sum_k (-1)^k u^{n+k} / (2^k k! (n+k)!), powers <= K.
LogPowerSeries power_j_series(int n, int K);
/// t^n N_n(t) from the integer-order logarithmic expansion, with
/// log(t/2) = (1/2) log u - (1/2) log 2 and constants folded into j = 0.
/// Negative n reduces through N_{-n} = (-1)^n N_n.
LogPowerSeries neumann_t_series(int n, int K);
/// t^n H^(kind)_n(t) = power_j_series +- i neumann_t_series.
LogPowerSeries hankel_t_series(int kind, int n, int K);

enum class Family { kReducedJ, kN, kH1, kH2 };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// (1/j!) d^j/dlambda^j at lambda = 0 of
///   J_{n+l}(z)/z^{n+l}          (kReducedJ, probe = z)
///   t^{n+l} C_{n+l}(t)          (kN, kH1, kH2, probe = t)
/// by Richardson-combined central differences in the order (steps 1e-3,
/// 5e-4). For kReducedJ and j = 1 the digamma closed form is evaluated too;
/// the two routes must agree to 1e-6 or ConvergenceError is thrown.
Complex lambda_taylor_target(Family family, int n, int j, double probe);

/// sum_k c_k(0) (-psi(n+k+1) - log 2) u^k as a series through K (the
/// analytic lambda^1 coefficient of J_{n+l}(z)/z^{n+l}).
LogPowerSeries reduced_j_order_derivative_series(int n, int K);

}  // namespace ordermap::specfun
