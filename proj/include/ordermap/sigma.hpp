#pragma once

// Order-shift generator  Sigma = sum_{m != 0} w(m) d_m / m  and its truncated
// exponential, acting on log-power series in u.
//
//   d_m      = (d/du)^m            for m > 0
//   d_{-m}   = m-fold int du       (zero integration constants)
//   w(m)     = 1          variant Z1 (reduced J_n / z^n, applied with sign -1)
//   w(m)     = (-1)^m     variant Z2 (z^n J_n, t^n N_n, t^n H_n, sign +1)
//
// The m-sum is truncated to |m| <= shift_window and the exponential to
// exp_order terms.

#include <vector>

#include "ordermap/logseries.hpp"

namespace ordermap::sigma {

enum class Variant { kZ1, kZ2 };

enum class Sign : int { kMinus = -1, kPlus = 1 };

inline double as_double(Sign s) { return static_cast<double>(static_cast<int>(s)); }

struct SigmaConfig {
  Variant variant = Variant::kZ1;
  int shift_window = 12;
  int exp_order = 4;
  double lambda = 0.0;

  /// Throws DomainError unless shift_window >= 1, exp_order >= 0 and
  /// 0 <= lambda <= 1.
  void validate() const;
};

/// One application of the truncated Sigma. Storage stays at s.k_trunc();
/// the reliable order drops by shift_window, since the derivative part at
/// power p reads coefficients up to p + shift_window.
LogPowerSeries apply_sigma(const LogPowerSeries& s, const SigmaConfig& cfg);

/// sum_{j=0}^{exp_order} (sign*lambda)^j Sigma^j s / j!.
/// Orders whose weight (sign*lambda)^j is exactly zero are skipped, so
/// lambda = 0 returns s itself.
LogPowerSeries apply_exp_sigma(const LogPowerSeries& s, const SigmaConfig& cfg, Sign sign);

/// Coefficient series of lambda^j in apply_exp_sigma, j = 0..exp_order:
/// entry j = (sign * Sigma) entry_{j-1} / j.
std::vector<LogPowerSeries> lambda_coefficients(const LogPowerSeries& s,
                                                const SigmaConfig& cfg, Sign sign);

/// d/d(z^2) + d/d(t^2) applied to 1/(t^2 - z^2) through the closed forms
/// +-(t^2 - z^2)^{-2}. Analytically zero; returns the residual.
/// Throws DomainError when t^2 == z^2.
double kernel_identity_check(double z, double t);

}  // namespace ordermap::sigma
