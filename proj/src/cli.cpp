#include "ordermap/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/identities.hpp"
#include "ordermap/report_io.hpp"
#include "ordermap/sigma.hpp"
#include "ordermap/sonine.hpp"
#include "ordermap/specfun.hpp"
#include "ordermap/suite.hpp"

namespace ordermap::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string format = "json";
  std::string output;

  std::string fn = "J";
  double order = 0.0;
  double arg = 1.0;

  std::string family = "N";
  int n = 0;
  int j = 1;
  int kind = 1;
  int K = 16;
  int M = 12;
  int exp_order = 4;
  int j_max = 4;
  int N = 200;
  int jobs = 1;
  std::optional<double> lambda;
  std::string variant;
  std::optional<int> sign;
  double z = 0.5;
  double t = 2.0;
  double nu = 0.5;
  std::vector<double> probes = {0.5, 1.0, 2.0};
  std::vector<int> exp_orders;
  std::string pair = "bessel";
  std::string id;
  std::optional<double> tol;
};

// Thrown for invalid combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

specfun::EvalResult evaluate_function(const RunConfig& c) {
  using namespace specfun;
  const Order order(c.order);
  if (c.fn == "J") return bessel_j(order, c.arg);
  if (c.fn == "N") return neumann(order, c.arg);
  if (c.fn == "Nlog") {
    if (!order.is_integer()) throw DomainError("Nlog needs an integer order");
    return neumann_log_series(order.n(), c.arg);
  }
  if (c.fn == "H1") return hankel(1, order, c.arg);
  if (c.fn == "H2") return hankel(2, order, c.arg);
  if (c.fn == "K") return k_bessel(order, c.arg);
  if (c.fn == "Jred") {
    EvalResult r = bessel_j(order, c.arg);
    r.value /= std::pow(c.arg, c.order);
    return r;
  }
  if (c.fn == "gamma") return {Complex(gamma(c.arg), 0.0), 0.0, 1};
  if (c.fn == "digamma") return {Complex(digamma(c.arg), 0.0), 0.0, 1};
  throw UsageError(fmt::format("unknown function '{}'", c.fn));
}

LogPowerSeries build_series(const RunConfig& c) {
  if (c.family == "J") return specfun::power_j_series(c.n, c.K);
  switch (specfun::parse_family(c.family)) {
    case specfun::Family::kReducedJ:
      return specfun::reduced_j_series(c.n, c.K);
    case specfun::Family::kN:
      return specfun::neumann_t_series(c.n, c.K);
    case specfun::Family::kH1:
      return specfun::hankel_t_series(1, c.n, c.K);
    case specfun::Family::kH2:
      return specfun::hankel_t_series(2, c.n, c.K);
  }
  throw UsageError("unknown family");
}

std::vector<int> j_max_list(const RunConfig& c) {
  if (!c.exp_orders.empty()) return c.exp_orders;
  std::vector<int> out;
  for (int jm = 2; jm <= std::max(2 * c.j_max, 2); jm += 2) out.push_back(jm);
  return out;
}

IdentityReport run_check(const RunConfig& c) {
  using namespace identities;
  if (c.id.empty()) throw UsageError("check needs --id");
  switch (parse_identity_id(c.id)) {
    case IdentityId::kEq2Roundtrip:
      return check_eq2_roundtrip(c.nu, c.z);
    case IdentityId::kEq3Closure:
      return check_eq3_closure(c.nu, c.z);
    case IdentityId::kEq3pOrderJ:
      return check_eq3prime_order(c.n, c.j, c.K, c.M);
    case IdentityId::kEq5Bilinear: {
      const auto pair = sonine::pair_by_name(c.pair);
      if (!pair) throw UsageError(fmt::format("unknown pair '{}'", c.pair));
      return sonine::bilinear_check(*pair, c.z, c.t, c.N);
    }
    case IdentityId::kEq9Real:
      return check_eq9_real(c.z, c.t, c.N);
    case IdentityId::kEq11Sum:
      return check_eq11(c.z, c.t, c.N);
    case IdentityId::kEq14Kernel:
      return check_eq14_kernel(c.z, c.t);
    case IdentityId::kEq15OrderJ:
      return check_eq15_order(c.n, c.j, c.K, c.M, c.probes);
    case IdentityId::kEq17Shift:
      return check_integer_shift(c.n, c.K, c.M, j_max_list(c), c.t, c.lambda.value_or(1.0));
    case IdentityId::kEq18OrderJ:
      return check_eq18_order(c.kind, c.n, c.j, c.K, c.M, c.probes);
  }
  throw UsageError("unknown identity");
}

int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (c.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(c.output);
  if (!file) {
    err << "cannot open " << c.output << '\n';
    return kExitUsage;
  }
  file << text;
  return 0;
}

int dispatch(const std::string& command, const RunConfig& c, std::ostream& out,
             std::ostream& err) {
  const io::OutputFormat format = io::parse_output_format(c.format);

  if (command == "eval") {
    try {
      const io::EvalRecord rec{c.fn, c.order, c.arg, evaluate_function(c)};
      return emit(c, io::render_eval(rec, format), out, err);
    } catch (const ConvergenceError& e) {
      err << "numeric failure: " << e.what() << '\n';
      return kExitFail;
    } catch (const NumericError& e) {
      err << "numeric failure: " << e.what() << '\n';
      return kExitFail;
    }
  }
  if (command == "series") {
    return emit(c, io::render_series(build_series(c), c.family, format), out, err);
  }
  if (command == "map") {
    const LogPowerSeries s = build_series(c);
    const bool reduced = c.family == "reducedJ";
    sigma::SigmaConfig cfg;
    if (c.variant.empty()) {
      cfg.variant = reduced ? sigma::Variant::kZ1 : sigma::Variant::kZ2;
    } else if (c.variant == "z1") {
      cfg.variant = sigma::Variant::kZ1;
    } else if (c.variant == "z2") {
      cfg.variant = sigma::Variant::kZ2;
    } else {
      throw UsageError(fmt::format("unknown variant '{}'", c.variant));
    }
    cfg.shift_window = c.M;
    cfg.exp_order = c.exp_order;
    cfg.lambda = c.lambda.value_or(0.0);
    cfg.validate();
    const int sign_value = c.sign.value_or(reduced ? -1 : 1);
    if (sign_value != 1 && sign_value != -1) throw UsageError("--sign must be +1 or -1");
    const auto sign = sign_value > 0 ? sigma::Sign::kPlus : sigma::Sign::kMinus;
    try {
      return emit(c, io::render_series(sigma::apply_exp_sigma(s, cfg, sign), c.family, format),
                  out, err);
    } catch (const NumericError& e) {
      err << "numeric failure: " << e.what() << '\n';
      return kExitFail;
    }
  }
  if (command == "check") {
    IdentityReport report;
    try {
      report = run_check(c);
    } catch (const ConvergenceError& e) {
      report.id = parse_identity_id(c.id);
      report.residual = std::numeric_limits<double>::infinity();
      report.notes.push_back(std::string("error: ") + e.what());
      report.finalize();
    }
    if (c.tol) report.override_tolerance(*c.tol);
    const int rc = emit(c, io::render_reports({report}, format), out, err);
    if (rc != 0) return rc;
    return report.verdict ? 0 : kExitFail;
  }
  if (command == "suite") {
    suite::SuiteOptions options;
    options.K = c.K;
    options.M = c.M;
    options.N = c.N;
    options.j_max = c.j_max;
    options.probes = c.probes;
    options.jobs = c.jobs;
    std::vector<IdentityReport> reports = suite::run(suite::battery(options), options.jobs);
    if (c.tol) {
      for (auto& r : reports) r.override_tolerance(*c.tol);
    }
    const int rc = emit(c, io::render_reports(reports, format), out, err);
    if (rc != 0) return rc;
    return suite::all_passed(reports) ? 0 : kExitFail;
  }
  throw UsageError(fmt::format("unknown command '{}'", command));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-shift operator toolkit for Bessel, Neumann and Hankel functions",
               "ordermap"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", c.output, "write to this file instead of stdout");
  };
  auto truncation = [&](CLI::App* sub) {
    sub->add_option("--K", c.K, "series truncation power")->check(CLI::Range(0, 400));
    sub->add_option("--M,--shift-window", c.M, "shift window of Sigma")->check(CLI::Range(1, 400));
  };

  auto* eval = app.add_subcommand("eval", "evaluate a reference function");
  eval->add_option("--fn", c.fn, "J, N, Nlog, H1, H2, K, Jred, gamma, digamma");
  eval->add_option("--order,--nu", c.order, "order");
  eval->add_option("--arg", c.arg, "argument");
  common(eval);

  auto* series = app.add_subcommand("series", "print a log-power series");
  series->add_option("--family", c.family, "reducedJ, J, N, H1, H2");
  series->add_option("--n", c.n, "integer order");
  truncation(series);
  common(series);

  auto* map = app.add_subcommand("map", "apply exp(lambda Sigma) to a series");
  map->add_option("--family", c.family, "reducedJ, J, N, H1, H2");
  map->add_option("--n", c.n, "integer order");
  map->add_option("--lambda", c.lambda, "shift in [0, 1]");
  map->add_option("--exp-order", c.exp_order, "terms of the exponential");
  map->add_option("--variant", c.variant, "z1 or z2");
  map->add_option("--sign", c.sign, "+1 or -1");
  truncation(map);
  common(map);

  auto* check = app.add_subcommand("check", "run one identity check");
  check->add_option("--id", c.id, "identity, e.g. EQ11")->required();
  check->add_option("--z", c.z);
  check->add_option("--t", c.t);
  check->add_option("--N", c.N);
  check->add_option("--nu,--order", c.nu);
  check->add_option("--n", c.n);
  check->add_option("--j", c.j);
  check->add_option("--kind", c.kind);
  check->add_option("--lambda", c.lambda);
  check->add_option("--probes", c.probes)->delimiter(',');
  check->add_option("--exp-orders", c.exp_orders, "J_max list")->delimiter(',');
  check->add_option("--jmax", c.j_max);
  check->add_option("--pair", c.pair);
  check->add_option("--tol", c.tol, "override the tolerance");
  truncation(check);
  common(check);

  auto* suite_cmd = app.add_subcommand("suite", "run the full battery");
  suite_cmd->add_option("--N", c.N);
  suite_cmd->add_option("--jmax", c.j_max);
  suite_cmd->add_option("--probes", c.probes)->delimiter(',');
  suite_cmd->add_option("--jobs", c.jobs)->check(CLI::Range(1, 64));
  suite_cmd->add_option("--tol", c.tol, "override every tolerance");
  truncation(suite_cmd);
  common(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace ordermap::cli
