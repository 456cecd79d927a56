#pragma once

// Serialization of reports, series and evaluations. Numbers are written with
// 17 significant digits; non-finite values as the strings "inf", "-inf", "nan".

#include <string>
#include <string_view>
#include <vector>

#include "ordermap/logseries.hpp"
#include "ordermap/report.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::io {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_output_format(std::string_view text);

std::string format_number(double x);

std::string report_json(const IdentityReport& r);
/// {"schema":1,"all_passed":...,"reports":[...]}
std::string reports_json(const std::vector<IdentityReport>& reports);
/// Header plus one row per report.
std::string reports_csv(const std::vector<IdentityReport>& reports);
std::string report_text(const IdentityReport& r);
std::string render_reports(const std::vector<IdentityReport>& reports, OutputFormat fmt);

std::string series_json(const LogPowerSeries& s, std::string_view kind);
/// Inverse of series_json; throws DomainError on malformed input.
LogPowerSeries parse_series_json(std::string_view text);
std::string render_series(const LogPowerSeries& s, std::string_view kind, OutputFormat fmt);

struct EvalRecord {
  std::string function;
  double order = 0.0;
  double argument = 0.0;
  specfun::EvalResult result;
};

std::string render_eval(const EvalRecord& e, OutputFormat fmt);

}  // namespace ordermap::io
