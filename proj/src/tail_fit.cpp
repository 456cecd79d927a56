#include "ordermap/tail_fit.hpp"

#include <cmath>

#include "ordermap/errors.hpp"

namespace ordermap {

double PowerTail::remainder_after(int N) const {
  if (exponent <= 1.0) return 0.0;
  return amplitude * std::pow(N + 0.5, 1.0 - exponent) / (exponent - 1.0);
}

PowerTail fit_power_tail(std::span<const double> n_values, std::span<const double> terms) {
  if (n_values.size() != terms.size()) throw DomainError("tail fit: size mismatch");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  double last_sign = 1.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] == 0.0 || !std::isfinite(terms[i]) || n_values[i] <= 0.0) continue;
    const double x = std::log(n_values[i]);
    const double y = std::log(std::abs(terms[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
    last_sign = terms[i] < 0.0 ? -1.0 : 1.0;
  }
  if (count < 2) throw DomainError("tail fit needs at least two nonzero terms");
  const double denom = count * sxx - sx * sx;
  const double slope = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / count;
  return {last_sign * std::exp(intercept), -slope};
}

}  // namespace ordermap
