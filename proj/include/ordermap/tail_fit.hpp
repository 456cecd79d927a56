#pragma once

#include <span>

namespace ordermap {

/// term(n) ~ amplitude * n^{-exponent}
struct PowerTail {
  double amplitude = 0.0;
  double exponent = 0.0;

  /// sum_{n > N} amplitude n^{-exponent}, via the midpoint integral
  /// amplitude (N + 1/2)^{1-exponent} / (exponent - 1). Zero when exponent <= 1.
  double remainder_after(int N) const;
};

/// Least-squares fit of log|term| against log n. The sign of the amplitude
/// is taken from the last term. Needs at least two nonzero terms.
PowerTail fit_power_tail(std::span<const double> n_values, std::span<const double> terms);

}  // namespace ordermap
