#pragma once

// Finite log-power series  sum_{k,j} a_{k,j} u^k (log u)^j.
//
// Every series lives in the half-square variable u = z^2/2 (or u = t^2/2).
// With that choice the operator 2 d/d(z^2) is exactly d/du and the
// antiderivative  int (1/2) d(z^2)  is exactly  int du, so no factors of two
// appear anywhere in the operator code.

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace ordermap {

using Complex = std::complex<double>;

enum class VariableTag { kUofZ, kUofT };

std::string_view to_string(VariableTag tag);
VariableTag parse_variable_tag(std::string_view text);

/// Exponents of one monomial u^k (log u)^j.
struct Monomial {
  int k = 0;
  int j = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Immutable-by-convention value type. Two truncation orders travel with it:
///
///   k_trunc         powers above it are not represented (not zero);
///   reliable_order  powers up to it are complete; between the two the
///                   stored coefficients may miss contributions.
///
/// Zero coefficients are never stored and every stored coefficient is finite.
class LogPowerSeries {
 public:
  using TermMap = std::map<Monomial, Complex>;

  LogPowerSeries(VariableTag tag, int k_trunc);
  LogPowerSeries(VariableTag tag, int k_trunc, int reliable_order);

  /// c u^k (log u)^j, declared exact through k_trunc.
  static LogPowerSeries monomial(VariableTag tag, int k, int j, Complex c,
                                 int k_trunc);

  /// Accumulates c into the (k, j) coefficient. Terms with k > k_trunc are
  /// rejected with TruncationError; non-finite c with NumericError.
  void add_term(int k, int j, Complex c);

  Complex coefficient(int k, int j) const;
  const TermMap& terms() const { return terms_; }
  VariableTag tag() const { return tag_; }
  int k_trunc() const { return k_trunc_; }
  int reliable_order() const { return reliable_order_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Smallest stored power of u; 0 for the empty series.
  int k_min() const;
  /// Largest stored power of log u; 0 for the empty series.
  int j_max() const;

  /// Copy with powers above `order` dropped; both orders are capped.
  LogPowerSeries truncated(int order) const;
  /// Copy whose reliable order is lowered to min(current, order).
  LogPowerSeries with_reliable_order(int order) const;

  friend bool operator==(const LogPowerSeries&, const LogPowerSeries&) = default;

 private:
  VariableTag tag_;
  int k_trunc_;
  int reliable_order_;
  TermMap terms_;
};

/// (d/du)^m s, termwise:
///   d/du[u^k L^j] = k u^{k-1} L^j + j u^{k-1} L^{j-1},  L = log u.
/// Both truncation orders drop by m.
LogPowerSeries derivative(const LogPowerSeries& s, int m);

/// m-fold antiderivative with zero integration constant at every stage:
///   int u^k L^j du = u^{k+1} sum_i (-1)^i j!/(j-i)! L^{j-i} / (k+1)^{i+1},  k != -1
///   int u^{-1} L^j du = L^{j+1}/(j+1).
/// Both truncation orders rise by m.
LogPowerSeries antiderivative(const LogPowerSeries& s, int m);

/// Principal-branch evaluation. Throws DomainError at u = 0 when a negative
/// power or a logarithm is present.
Complex evaluate(const LogPowerSeries& s, Complex u);

/// max_{k <= order, j} |a_{kj} - b_{kj}|, absent terms read as zero.
/// Throws DomainError on mismatched tags and TruncationError when `order`
/// exceeds either series' reliable order.
double compare(const LogPowerSeries& a, const LogPowerSeries& b, int order);

/// Same distance over every stored term, ignoring truncation bookkeeping.
double compare_all(const LogPowerSeries& a, const LogPowerSeries& b);

LogPowerSeries add(const LogPowerSeries& a, const LogPowerSeries& b);
LogPowerSeries subtract(const LogPowerSeries& a, const LogPowerSeries& b);
LogPowerSeries scale(const LogPowerSeries& s, Complex factor);
LogPowerSeries scale(const LogPowerSeries& s, double factor);
/// s * c u^shift; truncation orders move with the shift.
LogPowerSeries multiply_monomial(const LogPowerSeries& s, int shift, Complex c);

inline LogPowerSeries operator+(const LogPowerSeries& a, const LogPowerSeries& b) {
  return add(a, b);
}
inline LogPowerSeries operator-(const LogPowerSeries& a, const LogPowerSeries& b) {
  return subtract(a, b);
}
inline LogPowerSeries operator*(double f, const LogPowerSeries& s) { return scale(s, f); }
inline LogPowerSeries operator*(Complex f, const LogPowerSeries& s) { return scale(s, f); }

}  // namespace ordermap
