#include "ordermap/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/sigma.hpp"
#include "ordermap/specfun.hpp"
#include "ordermap/tail_fit.hpp"

namespace ordermap::identities {

namespace {

using specfun::Family;
using specfun::Order;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2 = 0.693147180559945309417232121458176568;

constexpr double kRoundtripTol = 1e-12;
constexpr double kClosureTol = 1e-13;
constexpr double kPartialSumTol = 5e-3;
// fitted symmetric-tail exponent must lie in [1.8, 2.2]
constexpr double kTailExponentCentre = 2.0;
constexpr double kTailExponentHalfWidth = 0.2;
constexpr double kReindexTol = 1e-8;
constexpr double kCoefficientTol = 1e-10;
constexpr double kOrder1Tol = 1e-5;
constexpr double kOrder2Tol = 1e-4;
constexpr double kRecombinationTol = 1e-12;
constexpr double kTrendRatio = 0.5;

void require_region(double z, double t, int N) {
  if (!(z >= 0.0) || !(z < t)) {
    throw DomainError(fmt::format("outside validated region 0 <= z < t (z = {}, t = {})", z, t));
  }
  if (t > specfun::kMaxArgument) {
    throw DomainError(fmt::format("t = {} above the evaluator range", t));
  }
  if (N < 10) throw DomainError(fmt::format("partial sums need N >= 10, got {}", N));
}

void require_probes(const std::vector<double>& probes) {
  if (probes.empty()) throw DomainError("at least one probe is needed");
  for (double t : probes) {
    if (!(t > 0.0 && t <= 4.0)) throw DomainError(fmt::format("probe {} not in (0, 4]", t));
  }
}

double tolerance_for_order(int j) {
  switch (j) {
    case 0:
      return kCoefficientTol;
    case 1:
      return kOrder1Tol;
    case 2:
      return kOrder2Tol;
  }
  throw DomainError(fmt::format("lambda order {} not in 0..2", j));
}

sigma::SigmaConfig z2_config(int M, int exp_order) {
  sigma::SigmaConfig cfg;
  cfg.variant = sigma::Variant::kZ2;
  cfg.shift_window = M;
  cfg.exp_order = exp_order;
  cfg.validate();
  return cfg;
}

double sanitized(double residual) { return std::isnan(residual) ? kInf : residual; }

// Terms of the J-part and N-part sums, indexed n + N.
struct BilinearTerms {
  int N = 0;
  std::vector<double> j_part;
  std::vector<double> n_part;

  double j_at(int n) const { return j_part[static_cast<std::size_t>(n + N)]; }
  double n_at(int n) const { return n_part[static_cast<std::size_t>(n + N)]; }
};

// [J_n(z)/z^n] t^{n-1} C_{n-1}(t), C in {J, N}, through R_n = 2^n n! J_n/z^n
// and Y^_m = t^m N_m/(2^{m+1} m!), so that no factor over- or underflows.
BilinearTerms bilinear_terms(double z, double t, int N) {
  BilinearTerms out;
  out.N = N;
  out.j_part.assign(2 * static_cast<std::size_t>(N) + 1, 0.0);
  out.n_part.assign(out.j_part.size(), 0.0);

  const std::vector<double> yhat = specfun::neumann_power_normalized(t, N + 1);
  std::vector<double> rz(static_cast<std::size_t>(N) + 2);
  std::vector<double> rt(static_cast<std::size_t>(N) + 2);
  for (int m = 0; m <= N + 1; ++m) {
    rz[m] = specfun::reduced_j_normalized(m, z);
    rt[m] = specfun::reduced_j_normalized(m, t);
  }
  // log k! for k = 0..N+2
  std::vector<double> log_fact(static_cast<std::size_t>(N) + 3, 0.0);
  for (std::size_t k = 1; k < log_fact.size(); ++k) {
    log_fact[k] = log_fact[k - 1] + std::log(static_cast<double>(k));
  }
  const double log_half_t2 = std::log(0.5 * t * t);
  const double log_half_z2 = z == 0.0 ? -kInf : std::log(0.5 * z * z);
  const double ratio2 = (z / t) * (z / t);

  auto slot = [N](int n) { return static_cast<std::size_t>(n + N); };

  const double j1t = specfun::bessel_j(Order::integer(1), t).value.real();
  const double n1t = specfun::neumann(Order::integer(1), t).value.real();
  out.j_part[slot(0)] = -rz[0] * j1t / t;
  out.n_part[slot(0)] = -rz[0] * n1t / t;

  for (int n = 1; n <= N; ++n) {
    out.n_part[slot(n)] = rz[n] * yhat[n - 1] / n;
    out.j_part[slot(n)] =
        rz[n] * rt[n - 1] *
        std::exp((n - 1) * log_half_t2 - n * kLog2 - log_fact[n] - log_fact[n - 1]);

    const int m = n;
    out.n_part[slot(-m)] =
        -4.0 * (m + 1) / (t * t) * std::pow(ratio2, m) * rz[m] * yhat[m + 1];
    out.j_part[slot(-m)] =
        -rz[m] * rt[m + 1] *
        std::exp(m * log_half_z2 - log_fact[m] - (m + 1) * kLog2 - log_fact[m + 1]);
  }
  return out;
}

void record_partial_sums(IdentityReport& report, const std::vector<double>& terms, int N) {
  auto at = [&](int n) { return terms[static_cast<std::size_t>(n + N)]; };
  double sum = at(0);
  int next = 1;
  for (int n = 1; n <= N; ++n) {
    sum += at(n) + at(-n);
    if (n == next || n == N) {
      report.observed.push_back(sum);
      if (n == next) {
        int decade = 1;
        while (decade * 10 <= next) decade *= 10;
        const int digit = next / decade;
        next = digit == 1 ? 2 * decade : digit == 2 ? 5 * decade : 10 * decade;
      }
    }
  }
}

double full_sum(const std::vector<double>& terms, int N) {
  // Pair symmetric terms from the outside in so the small tail enters first.
  double sum = 0.0;
  for (int n = N; n >= 1; --n) {
    sum += terms[static_cast<std::size_t>(N + n)] + terms[static_cast<std::size_t>(N - n)];
  }
  return sum + terms[static_cast<std::size_t>(N)];
}

void fit_tail(IdentityReport& report, const BilinearTerms& terms) {
  const int N = terms.N;
  std::vector<double> ns;
  std::vector<double> sym;
  for (int n = std::max(2, N / 10); n <= N; ++n) {
    ns.push_back(n);
    sym.push_back(terms.n_at(n) + terms.n_at(-n));
  }
  try {
    const PowerTail tail = fit_power_tail(ns, sym);
    report.tail_exponent = tail.exponent;
    report.tail_estimate = tail.remainder_after(N);
  } catch (const DomainError&) {
    report.tail_estimate = 0.0;
  }
}

Complex safe_evaluate(const LogPowerSeries& s, double probe) {
  try {
    return evaluate(s, Complex(0.5 * probe * probe, 0.0));
  } catch (const NumericError&) {
    return {kInf, 0.0};
  }
}

std::string probe_list(const std::vector<double>& probes) {
  std::string out;
  for (double p : probes) out += fmt::format("{}{}", out.empty() ? "" : ",", p);
  return out;
}

// Shared body of the Eq. 15 / Eq. 18 checkers.
struct OrderComparison {
  double residual = 0.0;
  double k_stability = 0.0;
  std::vector<double> distances;
};

OrderComparison compare_mapped_order(const LogPowerSeries& series, const LogPowerSeries& coarse,
                                     Family family, int n, int j, int M,
                                     const std::vector<double>& probes) {
  const sigma::SigmaConfig cfg = z2_config(M, j);
  OrderComparison out;
  try {
    const LogPowerSeries entry = sigma::lambda_coefficients(series, cfg, sigma::Sign::kPlus)[j];
    const LogPowerSeries entry_coarse =
        sigma::lambda_coefficients(coarse, cfg, sigma::Sign::kPlus)[j];
    for (double t : probes) {
      const Complex value = safe_evaluate(entry, t);
      const Complex target = specfun::lambda_taylor_target(family, n, j, t);
      const double d = sanitized(std::abs(value - target));
      out.distances.push_back(d);
      out.residual = std::max(out.residual, d);
      out.k_stability =
          std::max(out.k_stability, sanitized(std::abs(value - safe_evaluate(entry_coarse, t))));
    }
  } catch (const NumericError&) {
    out.residual = kInf;
    out.k_stability = kInf;
  }
  return out;
}

}  // namespace

IdentityReport check_eq2_roundtrip(double nu, double z) {
  const Order order(nu);
  const Complex j_pos = specfun::bessel_j(order, z).value;
  const Complex j_neg = specfun::bessel_j(order.negated(), z).value;
  const Complex n_pos = specfun::neumann(order, z).value;
  const double c = std::cos(specfun::kPi * nu);
  const double s = order.is_integer() ? 0.0 : std::sin(specfun::kPi * nu);
  const Complex rebuilt = j_pos * c - n_pos * s;
  const double scale = std::max({1.0, std::abs(j_pos), std::abs(n_pos)});

  IdentityReport report;
  report.id = IdentityId::kEq2Roundtrip;
  report.param("nu", nu).param("z", z);
  report.observed = {rebuilt.real(), j_neg.real()};
  report.residual = sanitized(std::abs(rebuilt - j_neg) / scale);
  report.tolerance = kRoundtripTol;
  report.finalize();
  return report;
}

IdentityReport check_eq3_closure(double nu, double z) {
  const Order order(nu);
  const Complex j = specfun::bessel_j(order, z).value;
  const Complex n = specfun::neumann(order, z).value;
  const Complex h1 = specfun::hankel(1, order, z).value;
  const Complex h2 = specfun::hankel(2, order, z).value;
  const Complex i(0.0, 1.0);
  const double scale = std::max({1.0, std::abs(j), std::abs(n)});

  IdentityReport report;
  report.id = IdentityId::kEq3Closure;
  report.param("nu", nu).param("z", z);
  const double dj = std::abs(0.5 * (h1 + h2) - j);
  const double dn = std::abs((h1 - h2) / (2.0 * i) - n);
  report.observed = {dj, dn};
  report.residual = sanitized(std::max(dj, dn) / scale);
  report.tolerance = kClosureTol;
  report.finalize();
  return report;
}

IdentityReport check_eq11(double z, double t, int N) {
  require_region(z, t, N);
  const BilinearTerms terms = bilinear_terms(z, t, N);
  const double target = (2.0 / specfun::kPi) / (t * t - z * z);
  const double sum = full_sum(terms.n_part, N);

  IdentityReport report;
  report.id = IdentityId::kEq11Sum;
  report.param("z", z).param("t", t).param("N", N);
  record_partial_sums(report, terms.n_part, N);
  report.residual = sanitized(std::abs(sum - target));
  report.tolerance = kPartialSumTol;
  fit_tail(report, terms);
  report.secondary.push_back(
      {"tail_exponent", sanitized(std::abs(report.tail_exponent - kTailExponentCentre)),
       kTailExponentHalfWidth});
  report.notes.push_back(fmt::format("target (2/pi)/(t^2-z^2) = {:.17g}", target));
  report.finalize();
  return report;
}

IdentityReport check_eq9_real(double z, double t, int N) {
  require_region(z, t, N);
  const BilinearTerms terms = bilinear_terms(z, t, N);
  const double j_sum = full_sum(terms.j_part, N);
  const double n_sum = full_sum(terms.n_part, N);
  const double target = (2.0 / specfun::kPi) / (t * t - z * z);

  IdentityReport report;
  report.id = IdentityId::kEq9Real;
  report.param("z", z).param("t", t).param("N", N);
  record_partial_sums(report, terms.j_part, N);
  report.residual = sanitized(std::abs(j_sum));
  report.tolerance = kPartialSumTol;
  fit_tail(report, terms);
  report.secondary.push_back({"n_part", sanitized(std::abs(n_sum - target)), kPartialSumTol});

  double reindex = 0.0;
  for (int n = -5; n <= 5; ++n) {
    const Complex direct = specfun::hankel(1, Order::integer(n), t).value;
    const Complex mirrored = (n % 2 == 0 ? 1.0 : -1.0) * specfun::hankel(1, Order::integer(-n), t).value;
    reindex = std::max(reindex, std::abs(direct - mirrored) / std::max(1.0, std::abs(direct)));
  }
  report.secondary.push_back({"hankel_reindex", sanitized(reindex), kReindexTol});
  report.notes.push_back(fmt::format("N-part sum = {:.17g}", n_sum));
  report.finalize();
  return report;
}

IdentityReport check_eq3prime_order(int n, int j, int K, int M) {
  if (K < 8) throw DomainError(fmt::format("K = {} below 8", K));
  if (M > K || M < 1) throw DomainError(fmt::format("M = {} not in 1..K", M));
  const double tol = j <= 1 ? kCoefficientTol : tolerance_for_order(j);
  const int reliable = K - M;
  if (reliable < 0) throw TruncationError(fmt::format("K = {}, M = {} leaves no reliable power", K, M));

  sigma::SigmaConfig cfg;
  cfg.variant = sigma::Variant::kZ1;
  cfg.shift_window = M;
  cfg.exp_order = std::max(j, 1);
  cfg.validate();

  const LogPowerSeries series = specfun::reduced_j_series(n, K);
  const auto entries = sigma::lambda_coefficients(series, cfg, sigma::Sign::kMinus);

  IdentityReport report;
  report.id = IdentityId::kEq3pOrderJ;
  report.param("n", n).param("j", j).param("K", K).param("M", M);
  report.tolerance = tol;

  if (j <= 1) {
    const LogPowerSeries target =
        j == 0 ? series : specfun::reduced_j_order_derivative_series(n, K);
    const LogPowerSeries& entry = entries[j];
    const int order = std::min({reliable, entry.reliable_order(), target.reliable_order()});
    if (order < 0) throw TruncationError("reliable order exhausted");
    double worst = 0.0;
    for (int k = 0; k <= order; ++k) {
      double d = 0.0;
      for (int l = 0; l <= std::max(entry.j_max(), target.j_max()); ++l) {
        d = std::max(d, std::abs(entry.coefficient(k, l) - target.coefficient(k, l)));
      }
      report.observed.push_back(d);
      worst = std::max(worst, d);
    }
    report.residual = sanitized(worst);
    report.notes.push_back(fmt::format("compared powers 0..{}", order));
  } else {
    const std::vector<double> probes = {0.5, 1.0, 2.0};
    double worst = 0.0;
    for (double z : probes) {
      const Complex value = safe_evaluate(entries[2], z);
      const Complex target = specfun::lambda_taylor_target(Family::kReducedJ, n, 2, z);
      const double d = sanitized(std::abs(value - target));
      report.observed.push_back(d);
      worst = std::max(worst, d);
    }
    report.param("probes", probes);
    report.residual = worst;
  }
  report.finalize();
  return report;
}

IdentityReport check_eq14_kernel(double z, double t) {
  IdentityReport report;
  report.id = IdentityId::kEq14Kernel;
  report.param("z", z).param("t", t);
  report.residual = sanitized(sigma::kernel_identity_check(z, t));
  report.observed = {report.residual};
  report.tolerance = 0.0;
  report.finalize();
  return report;
}

IdentityReport check_eq15_order(int n, int j, int K, int M, const std::vector<double>& probes) {
  if (n < 0) throw DomainError(fmt::format("n = {} must be >= 0", n));
  require_probes(probes);
  const double tol = tolerance_for_order(j);

  const OrderComparison cmp =
      compare_mapped_order(specfun::neumann_t_series(n, K), specfun::neumann_t_series(n, K - 2),
                           Family::kN, n, j, M, probes);

  IdentityReport report;
  report.id = IdentityId::kEq15OrderJ;
  report.param("n", n).param("j", j).param("K", K).param("M", M).param("probes", probes);
  report.observed = cmp.distances;
  report.residual = cmp.residual;
  report.tolerance = tol;
  report.secondary.push_back({"k_stability", cmp.k_stability, tol});
  report.notes.push_back(fmt::format("probes t = {}", probe_list(probes)));
  report.finalize();
  return report;
}

IdentityReport check_eq18_order(int kind, int n, int j, int K, int M,
                                const std::vector<double>& probes) {
  if (kind != 1 && kind != 2) throw DomainError(fmt::format("Hankel kind {} not 1 or 2", kind));
  if (n < 0) throw DomainError(fmt::format("n = {} must be >= 0", n));
  require_probes(probes);
  const double tol = tolerance_for_order(j);
  const Family family = kind == 1 ? Family::kH1 : Family::kH2;

  const OrderComparison cmp = compare_mapped_order(specfun::hankel_t_series(kind, n, K),
                                                   specfun::hankel_t_series(kind, n, K - 2),
                                                   family, n, j, M, probes);

  double recombination = kInf;
  try {
    const sigma::SigmaConfig cfg = z2_config(M, j);
    const auto h1 = sigma::lambda_coefficients(specfun::hankel_t_series(1, n, K), cfg,
                                               sigma::Sign::kPlus)[j];
    const auto h2 = sigma::lambda_coefficients(specfun::hankel_t_series(2, n, K), cfg,
                                               sigma::Sign::kPlus)[j];
    const auto jj = sigma::lambda_coefficients(specfun::power_j_series(n, K), cfg,
                                               sigma::Sign::kPlus)[j];
    recombination = sanitized(compare_all(scale(add(h1, h2), 0.5), jj));
  } catch (const NumericError&) {
  }

  IdentityReport report;
  report.id = IdentityId::kEq18OrderJ;
  report.param("kind", kind).param("n", n).param("j", j).param("K", K).param("M", M);
  report.param("probes", probes);
  report.observed = cmp.distances;
  report.residual = cmp.residual;
  report.tolerance = tol;
  report.secondary.push_back({"k_stability", cmp.k_stability, tol});
  report.secondary.push_back({"recombination", recombination, kRecombinationTol});
  report.notes.push_back(fmt::format("probes t = {}", probe_list(probes)));
  report.finalize();
  return report;
}

IdentityReport check_integer_shift(int n, int K, int M, const std::vector<int>& j_max_list,
                                   double t, double lambda) {
  if (n < 0) throw DomainError(fmt::format("n = {} must be >= 0", n));
  if (!(t > 0.0 && t <= 2.0)) throw DomainError(fmt::format("t = {} not in (0, 2]", t));
  if (j_max_list.empty()) throw DomainError("J_max list is empty");

  const LogPowerSeries series = specfun::neumann_t_series(n, K);
  const double target =
      std::pow(t, n + 1) * specfun::neumann(Order::integer(n + 1), t).value.real();

  IdentityReport report;
  report.id = IdentityId::kEq17Shift;
  report.param("n", n).param("K", K).param("M", M).param("t", t).param("lambda", lambda);
  std::vector<double> jm(j_max_list.begin(), j_max_list.end());
  report.param("J_max", jm);

  for (int j_max : j_max_list) {
    sigma::SigmaConfig cfg = z2_config(M, j_max);
    cfg.lambda = lambda;
    cfg.validate();
    double r = kInf;
    try {
      const LogPowerSeries mapped = sigma::apply_exp_sigma(series, cfg, sigma::Sign::kPlus);
      r = sanitized(std::abs(safe_evaluate(mapped, t) - target));
    } catch (const NumericError&) {
    }
    report.observed.push_back(r);
  }
  const double first = report.observed.front();
  const double last = report.observed.back();
  report.residual = (first == 0.0 && last == 0.0) ? 0.0 : sanitized(last / first);
  report.tolerance = kTrendRatio;
  report.notes.push_back("residual is r(last J_max) / r(first J_max)");
  report.finalize();
  return report;
}

}  // namespace ordermap::identities
