#pragma once

// Generating-pair engine. For a function Omega with inverse Mho:
//
//   Z_n(z) = (1/2 pi i) oint exp(-z^2 Omega(tau) + tau/2) tau^{-n-1} dtau
//   A_n(t) = int_0^inf exp(-t^2 x - Mho(x)/2) Mho(x)^n dx
//
// A_n uses the decaying exponent -t^2 x; the printed +t^2 x diverges for
// real t. Under that convention  sum_n Z_n(z) A_n(t) -> 1/(t^2 + z^2), the
// image of -1/(t^2 - z^2) under t -> i t, for |z| < |t|.
//
// For the Bessel pair Omega(tau) = 1/(2 tau), Mho(x) = 1/(2x):
//   Z_n(z) = J_n(z)/z^n,   A_n(t) = t^{n-1} K_{n-1}(t).

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordermap/quadrature.hpp"
#include "ordermap/report.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::sonine {

struct PairSettings {
  double contour_radius = 1.0;
  int contour_nodes = 256;  // power of two, >= 64
  int max_contour_nodes = 1 << 14;
  quadrature::HalfLineOptions halfline{};
};

class GeneratingPair {
 public:
  using OmegaFn = std::function<Complex(Complex)>;
  using InverseFn = std::function<Complex(double)>;
  /// Contour radius for (n, z); empty means settings.contour_radius.
  using RadiusRule = std::function<double(int, double)>;

  /// Validates Omega(Mho(x)) = x to 1e-12 (relative above 1) on sampled
  /// x in (0, 10], the node count and the radius. Throws DomainError.
  static GeneratingPair create(std::string name, OmegaFn omega, InverseFn inverse,
                               PairSettings settings = {}, RadiusRule radius_rule = {});

  const std::string& name() const { return name_; }
  const PairSettings& settings() const { return settings_; }
  Complex omega(Complex tau) const { return omega_(tau); }
  Complex inverse(double x) const { return inverse_(x); }
  double radius_for(int n, double z) const;

  GeneratingPair with_radius(double radius) const;
  GeneratingPair with_nodes(int nodes) const;
  /// Drops the radius rule so every n uses settings().contour_radius.
  GeneratingPair with_fixed_radius() const;

 private:
  GeneratingPair() = default;

  std::string name_;
  OmegaFn omega_;
  InverseFn inverse_;
  PairSettings settings_;
  RadiusRule radius_rule_;
};

/// Omega(tau) = 1/(2 tau). Uses a saddle-point radius rule for |n| > 8
/// (r = 2(n+1) for n > 0, r = z^2/(2(|n|+1)) for n < 0) so that long partial
/// sums keep relative accuracy; smaller |n| use the plain radius.
GeneratingPair bessel_pair(PairSettings settings = {});

/// Built-in registry; currently "bessel".
std::optional<GeneratingPair> pair_by_name(std::string_view name);
std::vector<std::string> registered_pairs();

/// Trapezoid rule on tau = r e^{i theta}. Starts at settings().contour_nodes
/// and doubles while the half-node estimate exceeds the rounding floor;
/// ConvergenceError past max_contour_nodes.
specfun::EvalResult z_function(const GeneratingPair& pair, int n, double z);
/// Same at an explicit radius.
specfun::EvalResult z_function(const GeneratingPair& pair, int n, double z, double radius);

/// Half-line exp-sinh quadrature with node doubling. ConvergenceError when
/// the integral does not settle or its tails do not decay.
specfun::EvalResult a_function(const GeneratingPair& pair, int n, double t);

/// Log-scaled forms used by bilinear_check; value() may overflow where these do not.
quadrature::ScaledValue z_function_scaled(const GeneratingPair& pair, int n, double z,
                                          double radius, int* nodes_used = nullptr);
quadrature::ScaledValue a_function_scaled(const GeneratingPair& pair, int n, double t,
                                          int* nodes_used = nullptr);

/// S_N = sum_{n=-N}^{N} Z_n(z) A_n(t) against 1/(t^2 + z^2). Reports the
/// partial sums at N = 1, 2, 5, 10, 20, 50, ..., the fitted C/n^alpha tail
/// over the last decade of symmetric terms, and a tail-corrected limit.
/// Tolerance 5e-3. Throws DomainError when z == t or N < 1.
IdentityReport bilinear_check(const GeneratingPair& pair, double z, double t, int N);

}  // namespace ordermap::sonine
