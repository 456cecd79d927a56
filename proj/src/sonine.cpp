#include "ordermap/sonine.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/tail_fit.hpp"

namespace ordermap::sonine {

namespace {

using quadrature::LogSumAccumulator;
using quadrature::ScaledValue;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInverseTol = 1e-12;
constexpr double kBilinearTol = 5e-3;
constexpr int kPlainRadiusLimit = 8;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// a - b for scaled values, returned in the scale of the larger one.
ScaledValue scaled_difference(const ScaledValue& a, const ScaledValue& b) {
  const double scale = std::max(a.log_scale, b.log_scale);
  return {a.mantissa * std::exp(a.log_scale - scale) - b.mantissa * std::exp(b.log_scale - scale),
          scale};
}

}  // namespace

GeneratingPair GeneratingPair::create(std::string name, OmegaFn omega, InverseFn inverse,
                                      PairSettings settings, RadiusRule radius_rule) {
  if (!omega || !inverse) throw DomainError("generating pair needs both functions");
  if (!(settings.contour_radius > 0.0)) {
    throw DomainError(fmt::format("contour radius must be positive, got {}", settings.contour_radius));
  }
  if (!is_power_of_two(settings.contour_nodes) || settings.contour_nodes < 64) {
    throw DomainError(fmt::format("contour nodes must be a power of two >= 64, got {}",
                                  settings.contour_nodes));
  }
  if (settings.max_contour_nodes < settings.contour_nodes) {
    throw DomainError("contour node budget below the starting node count");
  }
  constexpr std::array<double, 8> kSamples = {0.05, 0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 10.0};
  for (double x : kSamples) {
    const Complex back = omega(inverse(x));
    if (std::abs(back - x) > kInverseTol * std::max(1.0, x)) {
      throw DomainError(fmt::format("pair '{}': Omega(Mho({})) = {} + {}i is not the identity",
                                    name, x, back.real(), back.imag()));
    }
  }
  GeneratingPair pair;
  pair.name_ = std::move(name);
  pair.omega_ = std::move(omega);
  pair.inverse_ = std::move(inverse);
  pair.settings_ = settings;
  pair.radius_rule_ = std::move(radius_rule);
  return pair;
}

double GeneratingPair::radius_for(int n, double z) const {
  if (radius_rule_) {
    const double r = radius_rule_(n, z);
    if (r > 0.0 && std::isfinite(r)) return r;
  }
  return settings_.contour_radius;
}

GeneratingPair GeneratingPair::with_radius(double radius) const {
  PairSettings s = settings_;
  s.contour_radius = radius;
  return create(name_, omega_, inverse_, s, radius_rule_);
}

GeneratingPair GeneratingPair::with_nodes(int nodes) const {
  PairSettings s = settings_;
  s.contour_nodes = nodes;
  s.max_contour_nodes = std::max(s.max_contour_nodes, nodes);
  return create(name_, omega_, inverse_, s, radius_rule_);
}

GeneratingPair GeneratingPair::with_fixed_radius() const {
  return create(name_, omega_, inverse_, settings_, {});
}

GeneratingPair bessel_pair(PairSettings settings) {
  auto rule = [](int n, double z) -> double {
    if (std::abs(n) <= kPlainRadiusLimit) return 0.0;
    if (n > 0) return 2.0 * (n + 1);
    if (z == 0.0) return 0.0;
    return z * z / (2.0 * (-n + 1));
  };
  return GeneratingPair::create(
      "bessel", [](Complex tau) { return 0.5 / tau; },
      [](double x) { return Complex(0.5 / x, 0.0); }, settings, rule);
}

std::optional<GeneratingPair> pair_by_name(std::string_view name) {
  if (name == "bessel") return bessel_pair();
  return std::nullopt;
}

std::vector<std::string> registered_pairs() { return {"bessel"}; }

ScaledValue z_function_scaled(const GeneratingPair& pair, int n, double z, double radius,
                              int* nodes_used) {
  if (!(radius > 0.0)) throw DomainError(fmt::format("contour radius {} must be positive", radius));
  if (z == 0.0) {
    // Omega drops out: residue of exp(tau/2) tau^{-n-1}.
    if (nodes_used) *nodes_used = 0;
    if (n < 0) return {Complex{}, 0.0};
    double log_value = -n * std::log(2.0);
    for (int k = 2; k <= n; ++k) log_value -= std::log(static_cast<double>(k));
    return {Complex(1.0, 0.0), log_value};
  }
  const double z2 = z * z;
  const double log_r = std::log(radius);
  // log of exp(-z^2 Omega(tau) + tau/2) tau^{-n}; dtau/(2 pi i tau) = dtheta/(2 pi).
  auto log_term = [&](double theta) -> Complex {
    const Complex tau = std::polar(radius, theta);
    return -z2 * pair.omega(tau) + 0.5 * tau - static_cast<double>(n) * Complex(log_r, theta);
  };

  constexpr double kTwoPi = 2.0 * specfun::kPi;
  int nodes = pair.settings().contour_nodes / 2;
  LogSumAccumulator acc;
  for (int i = 0; i < nodes; ++i) acc.add(log_term(kTwoPi * i / nodes));
  ScaledValue previous = acc.result();
  previous.log_scale -= std::log(static_cast<double>(nodes));

  while (true) {
    const int next = 2 * nodes;
    for (int i = 1; i < next; i += 2) acc.add(log_term(kTwoPi * i / next));
    nodes = next;
    ScaledValue current = acc.result();
    current.log_scale -= std::log(static_cast<double>(nodes));

    const ScaledValue gap = scaled_difference(current, previous);
    const double gap_log = gap.log_abs();
    const double floor_log =
        std::max(std::log(1e-13) + current.log_abs(), std::log(64.0 * kEps) + acc.max_log());
    if (!(gap_log > floor_log)) {
      if (nodes_used) *nodes_used = nodes;
      return current;
    }
    if (2 * nodes > pair.settings().max_contour_nodes) {
      throw ConvergenceError(fmt::format(
          "contour integral Z_{}({}) for pair '{}' not converged at {} nodes", n, z, pair.name(),
          nodes));
    }
    previous = current;
  }
}

specfun::EvalResult z_function(const GeneratingPair& pair, int n, double z, double radius) {
  int nodes = 0;
  const ScaledValue v = z_function_scaled(pair, n, z, radius, &nodes);
  const Complex value = v.value();
  // Rounding floor of the trapezoid sum: largest term magnitude times eps.
  return {value, 64.0 * kEps * std::max(std::abs(value), std::exp(v.log_scale)), nodes};
}

specfun::EvalResult z_function(const GeneratingPair& pair, int n, double z) {
  return z_function(pair, n, z, pair.radius_for(n, z));
}

ScaledValue a_function_scaled(const GeneratingPair& pair, int n, double t, int* nodes_used) {
  if (!(t > 0.0)) throw DomainError(fmt::format("A_n needs t > 0, got {}", t));
  const double t2 = t * t;
  const double dn = n;
  auto log_integrand = [&](double x) -> Complex {
    const Complex mho = pair.inverse(x);
    if (mho == Complex{}) return -std::numeric_limits<double>::infinity();
    return -t2 * x - 0.5 * mho + dn * std::log(mho);
  };
  quadrature::HalfLineOptions options = pair.settings().halfline;
  options.center = quadrature::find_log_peak(log_integrand);
  const auto result = quadrature::integrate_half_line(log_integrand, options);
  if (!result.tails_decay) {
    throw ConvergenceError(fmt::format("A_{}({}) for pair '{}': integrand does not decay", n, t,
                                       pair.name()));
  }
  if (!result.converged) {
    throw ConvergenceError(fmt::format("A_{}({}) for pair '{}' not settled (gap {:.3e}, {} nodes)",
                                       n, t, pair.name(), result.rel_err, result.nodes));
  }
  if (nodes_used) *nodes_used = result.nodes;
  return result.integral;
}

specfun::EvalResult a_function(const GeneratingPair& pair, int n, double t) {
  int nodes = 0;
  const ScaledValue v = a_function_scaled(pair, n, t, &nodes);
  const Complex value = v.value();
  return {value, pair.settings().halfline.rel_tol * std::abs(value), nodes};
}

IdentityReport bilinear_check(const GeneratingPair& pair, double z, double t, int N) {
  if (N < 1) throw DomainError(fmt::format("bilinear check needs N >= 1, got {}", N));
  if (z == t) throw DomainError(fmt::format("bilinear check singular at z = t = {}", z));
  if (!(t > 0.0) || z < 0.0) throw DomainError("bilinear check needs t > 0 and z >= 0");

  std::vector<Complex> terms(2 * static_cast<std::size_t>(N) + 1);
  auto term = [&](int n) -> Complex& { return terms[static_cast<std::size_t>(n + N)]; };
  for (int n = -N; n <= N; ++n) {
    const ScaledValue zn = z_function_scaled(pair, n, z, pair.radius_for(n, z));
    const ScaledValue an = a_function_scaled(pair, n, t);
    term(n) = (zn * an).value();
  }

  IdentityReport report;
  report.id = IdentityId::kEq5Bilinear;
  report.param("z", z).param("t", t).param("N", N);
  report.tolerance = kBilinearTol;

  Complex sum = term(0);
  int next_checkpoint = 1;
  for (int n = 1; n <= N; ++n) {
    sum += term(n) + term(-n);
    if (n == next_checkpoint || n == N) {
      report.observed.push_back(sum.real());
      if (n == next_checkpoint) {
        // 1, 2, 5, 10, 20, 50, ...
        const int lead = next_checkpoint;
        int decade = 1;
        while (decade * 10 <= lead) decade *= 10;
        const int digit = lead / decade;
        next_checkpoint = digit == 1 ? 2 * decade : digit == 2 ? 5 * decade : 10 * decade;
      }
    }
  }

  const double target = 1.0 / (t * t + z * z);
  report.residual = std::abs(sum - target);

  const int first = std::max(1, N / 10);
  std::vector<double> ns;
  std::vector<double> sym;
  for (int n = first; n <= N; ++n) {
    ns.push_back(n);
    sym.push_back((term(n) + term(-n)).real());
  }
  try {
    const PowerTail tail = fit_power_tail(ns, sym);
    report.tail_exponent = tail.exponent;
    report.tail_estimate = tail.remainder_after(N);
  } catch (const DomainError&) {
    report.tail_estimate = 0.0;
  }
  report.secondary.push_back(
      {"tail_corrected", std::abs(sum + report.tail_estimate - target), kBilinearTol});
  if (std::abs(sum.imag()) > 0.0) {
    report.notes.push_back(fmt::format("imaginary part of S_N: {:.3e}", sum.imag()));
  }
  report.notes.push_back(fmt::format(
      "A_n uses exp(-t^2 x); target 1/(t^2+z^2) = {:.17g}; printed form -1/(t^2-z^2) = {:.17g}",
      target, -1.0 / (t * t - z * z)));
  if (N >= 2 && term(-N + 1) != Complex{}) {
    report.notes.push_back(fmt::format("negative-n term ratio |T_-N / T_-(N-1)| = {:.6g}",
                                       std::abs(term(-N) / term(-N + 1))));
  }
  report.finalize();
  return report;
}

}  // namespace ordermap::sonine
