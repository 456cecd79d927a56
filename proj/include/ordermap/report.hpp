#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordermap {

enum class IdentityId {
  kEq2Roundtrip,
  kEq3Closure,
  kEq3pOrderJ,
  kEq5Bilinear,
  kEq9Real,
  kEq11Sum,
  kEq14Kernel,
  kEq15OrderJ,
  kEq17Shift,
  kEq18OrderJ,
};

/// Canonical names: EQ2_ROUNDTRIP, EQ3_CLOSURE, EQ3P_ORDER_J, EQ5_BILINEAR,
/// EQ9_REAL, EQ11_SUM, EQ14_KERNEL, EQ15_ORDER_J, EQ17_SHIFT, EQ18_ORDER_J.
std::string_view to_string(IdentityId id);
/// Accepts the canonical names and the short forms EQ2, EQ3, EQ3P, ...
IdentityId parse_identity_id(std::string_view text);

/// A named parameter; scalars have one value.
struct ReportParam {
  std::string name;
  std::vector<double> values;

  friend bool operator==(const ReportParam&, const ReportParam&) = default;
  friend auto operator<=>(const ReportParam&, const ReportParam&) = default;
};

/// An additional residual with its own tolerance.
struct SecondaryCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
  friend bool operator==(const SecondaryCheck&, const SecondaryCheck&) = default;
};

struct IdentityReport {
  IdentityId id = IdentityId::kEq2Roundtrip;
  std::vector<ReportParam> params;
  std::vector<double> observed;
  double residual = 0.0;
  double tail_estimate = 0.0;
  double tail_exponent = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  std::vector<SecondaryCheck> secondary;
  std::vector<std::string> notes;
  bool verdict = false;

  IdentityReport& param(std::string name, double value);
  IdentityReport& param(std::string name, std::vector<double> values);
  /// Recomputes verdict: residual <= tolerance and every secondary check passes.
  /// A NaN residual fails.
  void finalize();
  /// Overrides the primary tolerance and re-finalizes.
  void override_tolerance(double tolerance);
  const SecondaryCheck* find_secondary(std::string_view name) const;
};

/// Sort key for deterministic aggregation: identity id, then params.
bool report_less(const IdentityReport& a, const IdentityReport& b);

}  // namespace ordermap
