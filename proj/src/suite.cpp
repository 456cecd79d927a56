#include "ordermap/suite.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <limits>
#include <random>

#include "ordermap/identities.hpp"
#include "ordermap/sonine.hpp"

namespace ordermap::suite {

namespace {

// A thrown checker still produces a (failed) report carrying the message.
Check guarded(IdentityId id, std::vector<ReportParam> params, Check fn) {
  return [id, params = std::move(params), fn = std::move(fn)]() {
    try {
      return fn();
    } catch (const std::exception& e) {
      IdentityReport r;
      r.id = id;
      r.params = params;
      r.residual = std::numeric_limits<double>::infinity();
      r.notes.push_back(std::string("error: ") + e.what());
      r.finalize();
      return r;
    }
  };
}

ReportParam p(std::string name, double v) { return {std::move(name), {v}}; }

}  // namespace

std::vector<Check> battery(const SuiteOptions& o) {
  using namespace identities;
  std::vector<Check> checks;
  const std::vector<std::pair<double, double>> sum_points = {{0.0, 2.0}, {0.5, 2.0}, {1.0, 3.0}};

  for (double nu : {0.5, 1.3, 2.0}) {
    for (double z : {1.0, 5.0}) {
      checks.push_back(guarded(IdentityId::kEq2Roundtrip, {p("nu", nu), p("z", z)},
                               [=] { return check_eq2_roundtrip(nu, z); }));
      checks.push_back(guarded(IdentityId::kEq3Closure, {p("nu", nu), p("z", z)},
                               [=] { return check_eq3_closure(nu, z); }));
    }
  }
  for (int n = 0; n <= 2; ++n) {
    checks.push_back(guarded(IdentityId::kEq3pOrderJ, {p("n", n), p("j", 1)},
                             [=] { return check_eq3prime_order(n, 1, o.K, o.M); }));
  }
  const int N = o.N;
  for (auto [z, t] : sum_points) {
    checks.push_back(guarded(IdentityId::kEq5Bilinear, {p("z", z), p("t", t)}, [=] {
      return sonine::bilinear_check(sonine::bessel_pair(), z, t, N);
    }));
    checks.push_back(guarded(IdentityId::kEq9Real, {p("z", z), p("t", t)},
                             [=] { return check_eq9_real(z, t, N); }));
    checks.push_back(guarded(IdentityId::kEq11Sum, {p("z", z), p("t", t)},
                             [=] { return check_eq11(z, t, N); }));
  }
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.05, 5.0);
  for (int i = 0; i < 20; ++i) {
    const double z = dist(rng);
    double t = dist(rng);
    if (t == z) t += 0.5;
    checks.push_back(guarded(IdentityId::kEq14Kernel, {p("z", z), p("t", t)},
                             [=] { return check_eq14_kernel(z, t); }));
  }
  for (int n = 0; n <= 1; ++n) {
    for (int j = 1; j <= 2; ++j) {
      checks.push_back(guarded(IdentityId::kEq15OrderJ, {p("n", n), p("j", j)},
                               [=] { return check_eq15_order(n, j, o.K, o.M, o.probes); }));
    }
    checks.push_back(guarded(IdentityId::kEq18OrderJ, {p("kind", 1), p("n", n)},
                             [=] { return check_eq18_order(1, n, 1, o.K, o.M, o.probes); }));
    std::vector<int> j_list;
    for (int jm = 2; jm <= std::max(2 * o.j_max, 2); jm += 2) j_list.push_back(jm);
    checks.push_back(guarded(IdentityId::kEq17Shift, {p("n", n)}, [=] {
      return check_integer_shift(n, o.K, o.M, j_list, 1.0);
    }));
  }
  return checks;
}

std::vector<IdentityReport> run(const std::vector<Check>& checks, int jobs) {
  std::vector<IdentityReport> reports;
  reports.reserve(checks.size());
  if (jobs <= 1) {
    for (const auto& c : checks) reports.push_back(c());
  } else {
    std::size_t next = 0;
    while (next < checks.size()) {
      std::vector<std::future<IdentityReport>> wave;
      for (int k = 0; k < jobs && next < checks.size(); ++k, ++next) {
        wave.push_back(std::async(std::launch::async, checks[next]));
      }
      for (auto& f : wave) reports.push_back(f.get());
    }
  }
  std::stable_sort(reports.begin(), reports.end(), report_less);
  return reports;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.verdict; });
}

}  // namespace ordermap::suite
