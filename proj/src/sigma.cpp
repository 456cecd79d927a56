#include "ordermap/sigma.hpp"

#include <cmath>

#include <fmt/format.h>

#include "ordermap/errors.hpp"

namespace ordermap::sigma {

void SigmaConfig::validate() const {
  if (shift_window < 1) {
    throw DomainError(fmt::format("shift window must be >= 1, got {}", shift_window));
  }
  if (exp_order < 0) {
    throw DomainError(fmt::format("exponential order must be >= 0, got {}", exp_order));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError(fmt::format("lambda must lie in [0, 1], got {}", lambda));
  }
}

LogPowerSeries apply_sigma(const LogPowerSeries& s, const SigmaConfig& cfg) {
  cfg.validate();
  const int storage = s.k_trunc();
  LogPowerSeries acc(s.tag(), storage + cfg.shift_window);
  LogPowerSeries down = s;
  LogPowerSeries up = s;
  for (int m = 1; m <= cfg.shift_window; ++m) {
    const double weight = (cfg.variant == Variant::kZ2 && m % 2 == 1) ? -1.0 : 1.0;
    down = derivative(down, 1);
    // Antiderivatives only raise powers, so anything above storage is gone for good.
    up = antiderivative(up, 1).truncated(storage);
    for (const auto& [key, c] : down.terms()) acc.add_term(key.k, key.j, c * (weight / m));
    for (const auto& [key, c] : up.terms()) acc.add_term(key.k, key.j, c * (-weight / m));
  }
  LogPowerSeries out(s.tag(), storage, s.reliable_order() - cfg.shift_window);
  for (const auto& [key, c] : acc.terms()) {
    if (key.k <= storage) out.add_term(key.k, key.j, c);
  }
  return out;
}

std::vector<LogPowerSeries> lambda_coefficients(const LogPowerSeries& s,
                                                const SigmaConfig& cfg, Sign sign) {
  cfg.validate();
  std::vector<LogPowerSeries> entries;
  entries.reserve(static_cast<std::size_t>(cfg.exp_order) + 1);
  entries.push_back(s);
  for (int j = 1; j <= cfg.exp_order; ++j) {
    entries.push_back(scale(apply_sigma(entries.back(), cfg), as_double(sign) / j));
  }
  return entries;
}

LogPowerSeries apply_exp_sigma(const LogPowerSeries& s, const SigmaConfig& cfg, Sign sign) {
  cfg.validate();
  if (cfg.lambda == 0.0 || cfg.exp_order == 0) return s;
  const auto entries = lambda_coefficients(s, cfg, sign);
  LogPowerSeries out = entries.front();
  double weight = 1.0;
  for (std::size_t j = 1; j < entries.size(); ++j) {
    weight *= cfg.lambda;
    out = add(out, scale(entries[j], weight));
  }
  return out;
}

double kernel_identity_check(double z, double t) {
  const double gap = t * t - z * z;
  if (gap == 0.0) {
    throw DomainError(fmt::format("singular kernel: t^2 == z^2 at z={}, t={}", z, t));
  }
  const double d_z2 = 1.0 / (gap * gap);
  const double d_t2 = -1.0 / (gap * gap);
  return std::abs(d_z2 + d_t2);
}

}  // namespace ordermap::sigma
