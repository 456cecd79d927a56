#include <array>
#include <cmath>

#include <fmt/format.h>

#include "ordermap/errors.hpp"
#include "ordermap/specfun.hpp"

namespace ordermap::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with exact zeros at integers.
double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(kPi * r);
}

}  // namespace

Complex gamma(Complex z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
    throw DomainError(fmt::format("gamma pole at {}", z.real()));
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  }
  z -= 1.0;
  Complex x = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    x += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError(fmt::format("gamma pole at {}", x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // pow(t, z+0.5) e^{-t} split in two halves to delay overflow.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * sum;
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return 0.0;
  if (x < 0.5) return sin_pi(x) * gamma(1.0 - x) / kPi;
  return 1.0 / gamma(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError(fmt::format("digamma pole at {}", x));
  double result = 0.0;
  if (x < 0.5) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    result -= kPi / std::tan(kPi * x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // -sum B_{2k} / (2k x^{2k}), k = 1..6
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * 691.0 / 32760)))));
  return result + std::log(x) - 0.5 / x - tail;
}

}  // namespace ordermap::specfun
