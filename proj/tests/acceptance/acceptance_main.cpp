// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
// Exit status 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ordermap/identities.hpp"
#include "ordermap/logseries.hpp"
#include "ordermap/sigma.hpp"
#include "ordermap/sonine.hpp"
#include "ordermap/specfun.hpp"

using namespace ordermap;
using specfun::Order;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const std::vector<std::pair<double, double>> kSumPoints = {{0.0, 2.0}, {0.5, 2.0}, {1.0, 3.0}};
const std::vector<double> kProbes = {0.5, 1.0, 2.0};
constexpr int kK = 16;
constexpr int kM = 12;
constexpr int kN = 200;

std::string g(double x) { return fmt::format("{:.3e}", x); }

Outcome c01_eq11() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0, alpha_lo = 1e9, alpha_hi = -1e9;
  for (auto [z, t] : kSumPoints) {
    const auto r = identities::check_eq11(z, t, kN);
    ok = ok && r.residual < 5e-3 && r.tail_exponent >= 1.8 && r.tail_exponent <= 2.2;
    worst = std::max(worst, r.residual);
    alpha_lo = std::min(alpha_lo, r.tail_exponent);
    alpha_hi = std::max(alpha_hi, r.tail_exponent);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 5.0;
  return {ok, fmt::format("max |S_200 - (2/pi)/(t^2-z^2)| = {} (< 5e-3), tail exponent in "
                          "[{:.4f}, {:.4f}] (need [1.8, 2.2]), {:.3f} s (< 5 s)",
                          g(worst), alpha_lo, alpha_hi, secs)};
}

Outcome c02_eq9() {
  double worst = 0.0;
  for (auto [z, t] : kSumPoints) worst = std::max(worst, identities::check_eq9_real(z, t, kN).residual);
  return {worst < 5e-3, fmt::format("max |J-part S_200| = {} (< 5e-3)", g(worst))};
}

Outcome c03_sonine() {
  const auto pair = sonine::bessel_pair();
  double worst = 0.0, radius_gap = 0.0;
  for (int n = 0; n <= 8; ++n) {
    for (double z : {0.3, 1.0, 2.5}) {
      const double expected = std::cyl_bessel_j(n, z) / std::pow(z, n);
      worst = std::max(worst, std::abs(sonine::z_function(pair, n, z).value - expected));
      radius_gap = std::max(radius_gap, std::abs(sonine::z_function(pair, n, z, 0.7).value -
                                                 sonine::z_function(pair, n, z, 1.3).value));
    }
  }
  return {worst < 1e-10 && radius_gap < 1e-10 && pair.settings().contour_nodes == 256,
          fmt::format("max |Z_n - J_n/z^n| = {} (< 1e-10), r=0.7 vs r=1.3 gap {} (< 1e-10), {} nodes",
                      g(worst), g(radius_gap), pair.settings().contour_nodes)};
}

Outcome c04_kfunction() {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const double base = std::sqrt(specfun::kPi / (2.0 * t)) * std::exp(-t);
    const double k12 = specfun::k_bessel(Order(0.5), t).value.real();
    const double k32 = specfun::k_bessel(Order(1.5), t).value.real();
    worst = std::max(worst, std::abs(k12 - base) / base);
    worst = std::max(worst, std::abs(k32 - base * (1 + 1 / t)) / (base * (1 + 1 / t)));
  }
  constexpr double kK0At2 = 0.113893872749533435652719574932;
  const double k0 = std::abs(specfun::k_integral(1, 2.0).value.real() - kK0At2);
  return {worst < 1e-8 && k0 < 1e-8,
          fmt::format("max rel error K_1/2, K_3/2 = {} (< 1e-8), |k_integral(1,2) - K_0(2)| = {} "
                      "(< 1e-8)",
                      g(worst), g(k0))};
}

Outcome c05_neumann_limit() {
  double limit_gap = 0.0;
  for (int n = 0; n <= 2; ++n) {
    for (double t : {0.5, 1.0, 2.0}) {
      limit_gap = std::max(limit_gap, std::abs(specfun::neumann(Order::integer(n), t).value -
                                               specfun::neumann_log_series(n, t).value));
    }
  }
  auto J = [](double nu, double z) { return specfun::bessel_j(Order(nu), z).value.real(); };
  auto N = [](double nu, double z) { return specfun::neumann(Order(nu), z).value.real(); };
  double wronskian = 0.0;
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.7, 5.0}) {
    for (double z : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double dj = 0.5 * (J(nu - 1, z) - J(nu + 1, z));
      const double dn = 0.5 * (N(nu - 1, z) - N(nu + 1, z));
      const double w = J(nu, z) * dn - dj * N(nu, z);
      wronskian = std::max(wronskian, std::abs(w - 2.0 / (specfun::kPi * z)));
    }
  }
  return {limit_gap < 1e-8 && wronskian < 1e-7,
          fmt::format("max |eps-limit N_n - log-series N_n| = {} (< 1e-8), max Wronskian "
                      "residual = {} (< 1e-7)",
                      g(limit_gap), g(wronskian))};
}

Outcome c06_eq3prime() {
  bool ok = true;
  std::string parts;
  for (int n = 0; n <= 2; ++n) {
    const auto r = identities::check_eq3prime_order(n, 1, kK, kM);
    ok = ok && r.residual <= 1e-10;
    parts += fmt::format(" n={}:{}", n, g(r.residual));
  }
  return {ok, "lambda^1 coefficient distance vs digamma form (< 1e-10):" + parts};
}

Outcome c07_eq15() {
  bool ok = true;
  std::string parts;
  for (int n = 0; n <= 1; ++n) {
    for (int j = 1; j <= 2; ++j) {
      const auto r = identities::check_eq15_order(n, j, kK, kM, kProbes);
      ok = ok && r.residual <= (j == 1 ? 1e-5 : 1e-4);
      parts += fmt::format(" n={},j={}:{}", n, j, g(r.residual));
    }
  }
  return {ok, "max |lambda^j entry - Taylor target| of t^n N_n (1e-5 / 1e-4):" + parts};
}

Outcome c08_eq18() {
  bool ok = true;
  std::string parts;
  double recombination = 0.0;
  for (int n = 0; n <= 1; ++n) {
    const auto r = identities::check_eq18_order(1, n, 1, kK, kM, kProbes);
    ok = ok && r.residual <= 1e-5;
    recombination = std::max(recombination, r.find_secondary("recombination")->residual);
    parts += fmt::format(" n={}:{}", n, g(r.residual));
  }
  ok = ok && recombination <= 1e-12;
  return {ok, fmt::format("H1 lambda^1 distance (< 1e-5):{}; recombination {} (< 1e-12)", parts,
                          g(recombination))};
}

Outcome c09_shift() {
  bool ok = true;
  std::string parts;
  for (int n = 0; n <= 1; ++n) {
    const auto r = identities::check_integer_shift(n, kK, kM, {2, 4, 6, 8}, 1.0);
    const double first = r.observed.front();
    const double last = r.observed.back();
    ok = ok && last * 2.0 <= first;
    parts += fmt::format(" n={}: r(2)={} r(8)={}", n, g(first), g(last));
  }
  return {ok, "lambda=1 shift residual must drop by >= 2 from J_max 2 to 8:" + parts};
}

Outcome c10_algebra() {
  double identity_gap = 0.0;
  sigma::SigmaConfig cfg;
  cfg.shift_window = kM;
  cfg.exp_order = 4;
  cfg.lambda = 0.0;
  for (int n = 0; n <= 2; ++n) {
    cfg.variant = sigma::Variant::kZ1;
    identity_gap = std::max(identity_gap,
                            compare_all(sigma::apply_exp_sigma(specfun::reduced_j_series(n, kK), cfg,
                                                               sigma::Sign::kMinus),
                                        specfun::reduced_j_series(n, kK)));
    cfg.variant = sigma::Variant::kZ2;
    identity_gap = std::max(identity_gap,
                            compare_all(sigma::apply_exp_sigma(specfun::neumann_t_series(n, kK), cfg,
                                                               sigma::Sign::kPlus),
                                        specfun::neumann_t_series(n, kK)));
  }

  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> power(-3, 12), logs(0, 3), count(1, 8), order(1, 3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const double eps = std::numeric_limits<double>::epsilon();
  int round_trip_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LogPowerSeries s(VariableTag::kUofZ, 12);
    const int terms = count(rng);
    double scale = 0.0;
    for (int i = 0; i < terms; ++i) {
      const Complex c(coef(rng), coef(rng));
      s.add_term(power(rng), logs(rng), c);
    }
    for (const auto& [key, c] : s.terms()) scale = std::max(scale, std::abs(c));
    const int m = order(rng);
    const auto back = derivative(antiderivative(s, m), m);
    if (compare_all(back, s) <= 64.0 * eps * scale && back.k_trunc() == s.k_trunc()) {
      ++round_trip_ok;
    }
  }

  std::uniform_real_distribution<double> arg(0.05, 5.0);
  double kernel = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double z = arg(rng);
    const double t = arg(rng);
    kernel = std::max(kernel, identities::check_eq14_kernel(z, t).residual);
  }
  return {identity_gap == 0.0 && round_trip_ok == 100 && kernel == 0.0,
          fmt::format("exp(0 Sigma) distance {} (== 0), round trips {}/100, kernel residual {} "
                      "(== 0)",
                      g(identity_gap), round_trip_ok, g(kernel))};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"partial sum of [J_n/z^n] t^{n-1} N_{n-1}", c01_eq11},
    {"vanishing J-part sum", c02_eq9},
    {"contour Z_n for the Bessel pair", c03_sonine},
    {"half-line quadrature K", c04_kfunction},
    {"integer-order Neumann limit and Wronskian", c05_neumann_limit},
    {"order-1 coefficients of reduced J", c06_eq3prime},
    {"orders 1-2 of t^n N_n", c07_eq15},
    {"order 1 of t^n H1_n and recombination", c08_eq18},
    {"lambda = 1 integer shift trend", c09_shift},
    {"operator algebra", c10_algebra},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
    return 2;
  }

  int failed = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = kCriteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                kCriteria[i].first, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
