#include "ordermap/report_io.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ordermap/errors.hpp"

namespace ordermap::io {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<int>(c));
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// JSON value: numbers bare, non-finite values quoted.
std::string json_number(double x) {
  const std::string s = format_number(x);
  return std::isfinite(x) ? s : escape(s);
}

std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += json_number(v[i]);
  }
  return out + "]";
}

std::string params_inline(const std::vector<ReportParam>& params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ';';
    out += p.name + '=';
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      if (i) out += ',';
      out += format_number(p.values[i]);
    }
  }
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

double json_double(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
  }
  throw DomainError("series json: expected a number");
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "text") return OutputFormat::kText;
  throw DomainError(fmt::format("unknown output format '{}'", text));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string report_json(const IdentityReport& r) {
  std::string out = fmt::format("{{\"schema\":{},\"identity_id\":{},\"params\":{{", kSchemaVersion,
                                escape(to_string(r.id)));
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    const auto& p = r.params[i];
    if (i) out += ',';
    out += escape(p.name) + ':';
    out += p.values.size() == 1 ? json_number(p.values[0]) : json_array(p.values);
  }
  out += "},\"observed\":" + json_array(r.observed);
  out += ",\"residual\":" + json_number(r.residual);
  out += ",\"tail_estimate\":" + json_number(r.tail_estimate);
  out += ",\"tail_exponent\":" + json_number(r.tail_exponent);
  out += ",\"tolerance\":" + json_number(r.tolerance);
  out += ",\"secondary\":[";
  for (std::size_t i = 0; i < r.secondary.size(); ++i) {
    const auto& s = r.secondary[i];
    if (i) out += ',';
    out += fmt::format("{{\"name\":{},\"residual\":{},\"tolerance\":{},\"passed\":{}}}",
                       escape(s.name), json_number(s.residual), json_number(s.tolerance),
                       s.passed());
  }
  out += "],\"notes\":[";
  for (std::size_t i = 0; i < r.notes.size(); ++i) {
    if (i) out += ',';
    out += escape(r.notes[i]);
  }
  out += fmt::format("],\"verdict\":\"{}\"}}", r.verdict ? "pass" : "fail");
  return out;
}

std::string reports_json(const std::vector<IdentityReport>& reports) {
  bool all = true;
  for (const auto& r : reports) all = all && r.verdict;
  std::string out =
      fmt::format("{{\"schema\":{},\"all_passed\":{},\"reports\":[", kSchemaVersion, all);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += i ? ",\n" : "\n";
    out += report_json(reports[i]);
  }
  return out + "\n]}";
}

std::string reports_csv(const std::vector<IdentityReport>& reports) {
  std::string out =
      "identity_id,params,residual,tail_estimate,tail_exponent,tolerance,secondary,verdict\n";
  for (const auto& r : reports) {
    std::string secondary;
    for (const auto& s : r.secondary) {
      if (!secondary.empty()) secondary += ';';
      secondary += fmt::format("{}={}/{}", s.name, format_number(s.residual),
                               format_number(s.tolerance));
    }
    out += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(r.id),
                       csv_field(params_inline(r.params)), format_number(r.residual),
                       format_number(r.tail_estimate), format_number(r.tail_exponent),
                       format_number(r.tolerance), csv_field(secondary),
                       r.verdict ? "pass" : "fail");
  }
  return out;
}

std::string report_text(const IdentityReport& r) {
  std::string out = fmt::format("{} [{}]  {}\n", to_string(r.id), r.verdict ? "PASS" : "FAIL",
                                params_inline(r.params));
  out += fmt::format("  residual  {:<24} tolerance {}\n", format_number(r.residual),
                     format_number(r.tolerance));
  if (!std::isnan(r.tail_exponent)) {
    out += fmt::format("  tail      {:<24} exponent  {}\n", format_number(r.tail_estimate),
                       format_number(r.tail_exponent));
  }
  for (const auto& s : r.secondary) {
    out += fmt::format("  {:<9} {:<24} tolerance {} {}\n", s.name, format_number(s.residual),
                       format_number(s.tolerance), s.passed() ? "ok" : "FAIL");
  }
  if (!r.observed.empty()) {
    out += "  observed ";
    for (double x : r.observed) out += ' ' + format_number(x);
    out += '\n';
  }
  for (const auto& n : r.notes) out += "  # " + n + '\n';
  return out;
}

std::string render_reports(const std::vector<IdentityReport>& reports, OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return reports.size() == 1 ? report_json(reports.front()) + '\n'
                                 : reports_json(reports) + '\n';
    case OutputFormat::kCsv:
      return reports_csv(reports);
    case OutputFormat::kText: {
      std::string out;
      int passed = 0;
      for (const auto& r : reports) {
        out += report_text(r);
        passed += r.verdict ? 1 : 0;
      }
      if (reports.size() > 1) {
        out += fmt::format("{} of {} passed\n", passed, reports.size());
      }
      return out;
    }
  }
  return {};
}

std::string series_json(const LogPowerSeries& s, std::string_view kind) {
  std::string out = fmt::format(
      "{{\"schema\":{},\"kind\":{},\"variable_tag\":{},\"K_trunc\":{},\"reliable_order\":{},"
      "\"terms\":[",
      kSchemaVersion, escape(kind), escape(to_string(s.tag())), s.k_trunc(), s.reliable_order());
  bool first = true;
  for (const auto& [key, c] : s.terms()) {
    if (!first) out += ',';
    first = false;
    out += fmt::format("{{\"k\":{},\"j\":{},\"re\":{},\"im\":{}}}", key.k, key.j,
                       json_number(c.real()), json_number(c.imag()));
  }
  return out + "]}";
}

LogPowerSeries parse_series_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("series json: {}", e.what()));
  }
  try {
    if (doc.at("schema").get<int>() != kSchemaVersion) {
      throw DomainError("series json: unsupported schema");
    }
    LogPowerSeries s(parse_variable_tag(doc.at("variable_tag").get<std::string>()),
                     doc.at("K_trunc").get<int>(), doc.at("reliable_order").get<int>());
    for (const auto& t : doc.at("terms")) {
      s.add_term(t.at("k").get<int>(), t.at("j").get<int>(),
                 Complex(json_double(t.at("re")), json_double(t.at("im"))));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("series json: {}", e.what()));
  }
}

std::string render_series(const LogPowerSeries& s, std::string_view kind, OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return series_json(s, kind) + '\n';
    case OutputFormat::kCsv: {
      std::string out = "k,j,re,im\n";
      for (const auto& [key, c] : s.terms()) {
        out += fmt::format("{},{},{},{}\n", key.k, key.j, format_number(c.real()),
                           format_number(c.imag()));
      }
      return out;
    }
    case OutputFormat::kText: {
      std::string out = fmt::format("{} in {}  K_trunc {}  reliable {}\n", kind, to_string(s.tag()),
                                    s.k_trunc(), s.reliable_order());
      for (const auto& [key, c] : s.terms()) {
        out += fmt::format("  u^{:<4} log^{}  {:>25} {:>25}\n", key.k, key.j,
                           format_number(c.real()), format_number(c.imag()));
      }
      return out;
    }
  }
  return {};
}

std::string render_eval(const EvalRecord& e, OutputFormat f) {
  const Complex v = e.result.value;
  switch (f) {
    case OutputFormat::kJson:
      return fmt::format(
          "{{\"schema\":{},\"function\":{},\"order\":{},\"argument\":{},\"re\":{},\"im\":{},"
          "\"err_estimate\":{},\"effort\":{}}}\n",
          kSchemaVersion, escape(e.function), json_number(e.order), json_number(e.argument),
          json_number(v.real()), json_number(v.imag()), json_number(e.result.err_estimate),
          e.result.effort);
    case OutputFormat::kCsv:
      return fmt::format("function,order,argument,re,im,err_estimate,effort\n{},{},{},{},{},{},{}\n",
                         e.function, format_number(e.order), format_number(e.argument),
                         format_number(v.real()), format_number(v.imag()),
                         format_number(e.result.err_estimate), e.result.effort);
    case OutputFormat::kText: {
      std::string out = fmt::format("{}_{}({}) = {}", e.function, format_number(e.order),
                                    format_number(e.argument), format_number(v.real()));
      if (v.imag() != 0.0) {
        out += fmt::format(" {} {}i", v.imag() < 0 ? '-' : '+', format_number(std::abs(v.imag())));
      }
      return out + fmt::format("  (err {:.2e}, effort {})\n", e.result.err_estimate,
                               e.result.effort);
    }
  }
  return {};
}

}  // namespace ordermap::io
