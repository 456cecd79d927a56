#include "ordermap/logseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ordermap/errors.hpp"

namespace ordermap {

namespace {

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void accumulate(LogPowerSeries::TermMap& terms, Monomial key, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms.erase(it);
  }
}

// Rebuilds a series from accumulated terms, dropping anything above k_trunc.
LogPowerSeries assemble(VariableTag tag, int k_trunc, int reliable,
                        const LogPowerSeries::TermMap& terms) {
  LogPowerSeries out(tag, k_trunc, reliable);
  for (const auto& [key, c] : terms) {
    if (key.k > k_trunc) continue;
    out.add_term(key.k, key.j, c);
  }
  return out;
}

void require_same_tag(const LogPowerSeries& a, const LogPowerSeries& b) {
  if (a.tag() != b.tag()) {
    throw DomainError(fmt::format("variable tag mismatch: {} vs {}", to_string(a.tag()),
                                  to_string(b.tag())));
  }
}

LogPowerSeries derivative_once(const LogPowerSeries& s) {
  LogPowerSeries::TermMap acc;
  for (const auto& [key, c] : s.terms()) {
    if (key.k != 0) accumulate(acc, {key.k - 1, key.j}, c * static_cast<double>(key.k));
    if (key.j > 0) accumulate(acc, {key.k - 1, key.j - 1}, c * static_cast<double>(key.j));
  }
  return assemble(s.tag(), s.k_trunc() - 1, s.reliable_order() - 1, acc);
}

LogPowerSeries antiderivative_once(const LogPowerSeries& s) {
  LogPowerSeries::TermMap acc;
  for (const auto& [key, c] : s.terms()) {
    if (key.k == -1) {
      accumulate(acc, {0, key.j + 1}, c / static_cast<double>(key.j + 1));
      continue;
    }
    // u^{k+1} sum_i (-1)^i j!/(j-i)! L^{j-i} / (k+1)^{i+1}
    const double kp1 = key.k + 1;
    double factor = 1.0 / kp1;
    for (int i = 0; i <= key.j; ++i) {
      accumulate(acc, {key.k + 1, key.j - i}, c * factor);
      factor *= -static_cast<double>(key.j - i) / kp1;
    }
  }
  return assemble(s.tag(), s.k_trunc() + 1, s.reliable_order() + 1, acc);
}

}  // namespace

std::string_view to_string(VariableTag tag) {
  switch (tag) {
    case VariableTag::kUofZ:
      return "u-of-z";
    case VariableTag::kUofT:
      return "u-of-t";
  }
  return "?";
}

VariableTag parse_variable_tag(std::string_view text) {
  if (text == "u-of-z") return VariableTag::kUofZ;
  if (text == "u-of-t") return VariableTag::kUofT;
  throw DomainError(fmt::format("unknown variable tag '{}'", text));
}

LogPowerSeries::LogPowerSeries(VariableTag tag, int k_trunc)
    : LogPowerSeries(tag, k_trunc, k_trunc) {}

LogPowerSeries::LogPowerSeries(VariableTag tag, int k_trunc, int reliable_order)
    : tag_(tag), k_trunc_(k_trunc), reliable_order_(std::min(reliable_order, k_trunc)) {}

LogPowerSeries LogPowerSeries::monomial(VariableTag tag, int k, int j, Complex c,
                                        int k_trunc) {
  LogPowerSeries s(tag, k_trunc);
  s.add_term(k, j, c);
  return s;
}

void LogPowerSeries::add_term(int k, int j, Complex c) {
  if (j < 0) throw DomainError(fmt::format("negative log power {}", j));
  if (k > k_trunc_) {
    throw TruncationError(
        fmt::format("term u^{} above truncation order {}", k, k_trunc_));
  }
  if (!is_finite(c)) {
    throw NumericError(fmt::format("non-finite coefficient at (k={}, j={})", k, j));
  }
  accumulate(terms_, {k, j}, c);
  if (auto it = terms_.find({k, j}); it != terms_.end() && !is_finite(it->second)) {
    throw NumericError(fmt::format("coefficient overflow at (k={}, j={})", k, j));
  }
}

Complex LogPowerSeries::coefficient(int k, int j) const {
  auto it = terms_.find({k, j});
  return it == terms_.end() ? Complex{} : it->second;
}

int LogPowerSeries::k_min() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.k;
}

int LogPowerSeries::j_max() const {
  int jm = 0;
  for (const auto& [key, c] : terms_) jm = std::max(jm, key.j);
  return jm;
}

LogPowerSeries LogPowerSeries::truncated(int order) const {
  return assemble(tag_, std::min(order, k_trunc_), std::min(order, reliable_order_), terms_);
}

LogPowerSeries LogPowerSeries::with_reliable_order(int order) const {
  LogPowerSeries out = *this;
  out.reliable_order_ = std::min(order, reliable_order_);
  return out;
}

LogPowerSeries derivative(const LogPowerSeries& s, int m) {
  if (m < 1) throw DomainError(fmt::format("derivative order must be >= 1, got {}", m));
  LogPowerSeries out = derivative_once(s);
  for (int i = 1; i < m; ++i) out = derivative_once(out);
  return out;
}

LogPowerSeries antiderivative(const LogPowerSeries& s, int m) {
  if (m < 1) throw DomainError(fmt::format("antiderivative order must be >= 1, got {}", m));
  LogPowerSeries out = antiderivative_once(s);
  for (int i = 1; i < m; ++i) out = antiderivative_once(out);
  return out;
}

Complex evaluate(const LogPowerSeries& s, Complex u) {
  if (u == Complex{}) {
    if (s.k_min() < 0 || s.j_max() > 0) {
      throw DomainError("evaluation at u = 0 of a series with negative powers or logs");
    }
    return s.coefficient(0, 0);
  }
  const Complex log_u = std::log(u);
  Complex sum{};
  for (const auto& [key, c] : s.terms()) {
    Complex term = c * std::pow(u, key.k);
    if (key.j > 0) term *= std::pow(log_u, key.j);
    sum += term;
  }
  return sum;
}

double compare(const LogPowerSeries& a, const LogPowerSeries& b, int order) {
  require_same_tag(a, b);
  const int reliable = std::min(a.reliable_order(), b.reliable_order());
  if (order > reliable) {
    throw TruncationError(
        fmt::format("comparison order {} exceeds reliable order {}", order, reliable));
  }
  double dist = 0.0;
  for (const auto& [key, c] : a.terms()) {
    if (key.k > order) continue;
    dist = std::max(dist, std::abs(c - b.coefficient(key.k, key.j)));
  }
  for (const auto& [key, c] : b.terms()) {
    if (key.k > order) continue;
    if (!a.terms().contains(key)) dist = std::max(dist, std::abs(c));
  }
  return dist;
}

double compare_all(const LogPowerSeries& a, const LogPowerSeries& b) {
  require_same_tag(a, b);
  double dist = 0.0;
  for (const auto& [key, c] : a.terms()) {
    dist = std::max(dist, std::abs(c - b.coefficient(key.k, key.j)));
  }
  for (const auto& [key, c] : b.terms()) {
    if (!a.terms().contains(key)) dist = std::max(dist, std::abs(c));
  }
  return dist;
}

LogPowerSeries add(const LogPowerSeries& a, const LogPowerSeries& b) {
  require_same_tag(a, b);
  LogPowerSeries::TermMap acc = a.terms();
  for (const auto& [key, c] : b.terms()) accumulate(acc, key, c);
  return assemble(a.tag(), std::min(a.k_trunc(), b.k_trunc()),
                  std::min(a.reliable_order(), b.reliable_order()), acc);
}

LogPowerSeries subtract(const LogPowerSeries& a, const LogPowerSeries& b) {
  return add(a, scale(b, -1.0));
}

LogPowerSeries scale(const LogPowerSeries& s, Complex factor) {
  LogPowerSeries::TermMap acc;
  for (const auto& [key, c] : s.terms()) accumulate(acc, key, c * factor);
  return assemble(s.tag(), s.k_trunc(), s.reliable_order(), acc);
}

// Real factors scale real and imaginary parts independently; the Hankel
// recombination check depends on that being bit-exact.
LogPowerSeries scale(const LogPowerSeries& s, double factor) {
  LogPowerSeries::TermMap acc;
  for (const auto& [key, c] : s.terms()) accumulate(acc, key, c * factor);
  return assemble(s.tag(), s.k_trunc(), s.reliable_order(), acc);
}

LogPowerSeries multiply_monomial(const LogPowerSeries& s, int shift, Complex c) {
  LogPowerSeries::TermMap acc;
  for (const auto& [key, coef] : s.terms()) accumulate(acc, {key.k + shift, key.j}, coef * c);
  return assemble(s.tag(), s.k_trunc() + shift, s.reliable_order() + shift, acc);
}

}  // namespace ordermap
