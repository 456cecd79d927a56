#include "ordermap/report.hpp"

#include <array>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "ordermap/errors.hpp"

namespace ordermap {

namespace {

struct IdName {
  IdentityId id;
  std::string_view canonical;
  std::string_view short_form;
};

constexpr std::array<IdName, 10> kNames = {{
    {IdentityId::kEq2Roundtrip, "EQ2_ROUNDTRIP", "EQ2"},
    {IdentityId::kEq3Closure, "EQ3_CLOSURE", "EQ3"},
    {IdentityId::kEq3pOrderJ, "EQ3P_ORDER_J", "EQ3P"},
    {IdentityId::kEq5Bilinear, "EQ5_BILINEAR", "EQ5"},
    {IdentityId::kEq9Real, "EQ9_REAL", "EQ9"},
    {IdentityId::kEq11Sum, "EQ11_SUM", "EQ11"},
    {IdentityId::kEq14Kernel, "EQ14_KERNEL", "EQ14"},
    {IdentityId::kEq15OrderJ, "EQ15_ORDER_J", "EQ15"},
    {IdentityId::kEq17Shift, "EQ17_SHIFT", "EQ17"},
    {IdentityId::kEq18OrderJ, "EQ18_ORDER_J", "EQ18"},
}};

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.canonical;
  }
  return "?";
}

IdentityId parse_identity_id(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& n : kNames) {
    if (upper == n.canonical || upper == n.short_form) return n.id;
  }
  throw DomainError(fmt::format("unknown identity '{}'", text));
}

IdentityReport& IdentityReport::param(std::string name, double value) {
  params.push_back({std::move(name), {value}});
  return *this;
}

IdentityReport& IdentityReport::param(std::string name, std::vector<double> values) {
  params.push_back({std::move(name), std::move(values)});
  return *this;
}

void IdentityReport::finalize() {
  verdict = !std::isnan(residual) && residual <= tolerance;
  for (const auto& s : secondary) verdict = verdict && s.passed();
}

void IdentityReport::override_tolerance(double value) {
  tolerance = value;
  finalize();
}

const SecondaryCheck* IdentityReport::find_secondary(std::string_view name) const {
  for (const auto& s : secondary) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool report_less(const IdentityReport& a, const IdentityReport& b) {
  if (a.id != b.id) return a.id < b.id;
  return a.params < b.params;
}

}  // namespace ordermap
