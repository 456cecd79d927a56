#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ordermap/errors.hpp"
#include "ordermap/sigma.hpp"
#include "ordermap/specfun.hpp"

using namespace ordermap;
using sigma::SigmaConfig;
using sigma::Sign;
using sigma::Variant;

namespace {

SigmaConfig config(Variant v, int M, int exp_order, double lambda = 0.0) {
  SigmaConfig c;
  c.variant = v;
  c.shift_window = M;
  c.exp_order = exp_order;
  c.lambda = lambda;
  return c;
}

}  // namespace

TEST(Sigma, LambdaZeroIsIdentity) {
  for (int n = 0; n <= 2; ++n) {
    const auto s = specfun::neumann_t_series(n, 12);
    const auto mapped = sigma::apply_exp_sigma(s, config(Variant::kZ2, 12, 4, 0.0), Sign::kPlus);
    EXPECT_EQ(mapped, s);
    EXPECT_EQ(compare_all(mapped, s), 0.0);
  }
}

TEST(Sigma, HandExpansionOfConstant) {
  // Z2, M = 1 on u^0: Sigma 1 = u, Sigma^2 1 = -1 + u^2/2.
  const auto one = LogPowerSeries::monomial(VariableTag::kUofT, 0, 0, 1.0, 8);
  const auto entries = sigma::lambda_coefficients(one, config(Variant::kZ2, 1, 2), Sign::kPlus);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[1].coefficient(1, 0), Complex(1.0));
  EXPECT_EQ(entries[1].size(), 1u);
  EXPECT_EQ(entries[2].coefficient(0, 0), Complex(-0.5));
  EXPECT_EQ(entries[2].coefficient(2, 0), Complex(0.25));
  EXPECT_EQ(entries[2].size(), 2u);
}

TEST(Sigma, SignFlipsOddOrders) {
  const auto s = specfun::reduced_j_series(1, 14);
  const auto plus = sigma::lambda_coefficients(s, config(Variant::kZ1, 6, 3), Sign::kPlus);
  const auto minus = sigma::lambda_coefficients(s, config(Variant::kZ1, 6, 3), Sign::kMinus);
  EXPECT_EQ(compare_all(plus[1], scale(minus[1], -1.0)), 0.0);
  EXPECT_EQ(compare_all(plus[2], minus[2]), 0.0);
}

TEST(Sigma, ReliableOrderDropsByWindow) {
  const auto s = specfun::reduced_j_series(0, 16);
  const auto once = sigma::apply_sigma(s, config(Variant::kZ1, 12, 1));
  EXPECT_EQ(once.k_trunc(), 16);
  EXPECT_EQ(once.reliable_order(), 4);
}

TEST(Sigma, ExpSumsTheLambdaEntries) {
  const auto s = specfun::reduced_j_series(0, 16);
  const auto cfg = config(Variant::kZ1, 8, 3, 0.25);
  const auto entries = sigma::lambda_coefficients(s, cfg, Sign::kMinus);
  LogPowerSeries expected = entries[0];
  double w = 1.0;
  for (std::size_t j = 1; j < entries.size(); ++j) {
    w *= 0.25;
    expected = expected + scale(entries[j], w);
  }
  EXPECT_LE(compare_all(sigma::apply_exp_sigma(s, cfg, Sign::kMinus), expected), 1e-15);
}

TEST(Sigma, FirstOrderOnReducedJ0IsCardinalDerivative) {
  // lambda^1 entry of exp(-lambda Sigma_z1)[J_0] at z = 1 equals the
  // derivative at nu = 0 of the cardinal interpolant of nu -> J_nu(1)/1^nu,
  // -sum_{m != 0} (-1)^m f_m / m (high-precision reference value).
  const auto s = specfun::reduced_j_series(0, 16);
  const auto e = sigma::lambda_coefficients(s, config(Variant::kZ1, 12, 1), Sign::kMinus)[1];
  EXPECT_NEAR(evaluate(e, 0.5).real(), 0.893243740975026168, 1e-12);
}

TEST(Sigma, CardinalOracleFromSamples) {
  // The same cardinal sum assembled from J_m(1) samples; the terms decay
  // like 1/(m 2^m m!), so stopping at m = 10 leaves about 1e-12.
  double sum = 0.0;
  for (int m = 1; m <= 10; ++m) {
    const double fp = specfun::bessel_j(specfun::Order::integer(m), 1.0).value.real();
    const double fm = specfun::bessel_j(specfun::Order::integer(-m), 1.0).value.real();
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    sum += -sign * (fp - fm) / m;
  }
  EXPECT_NEAR(sum, 0.893243740975026168, 5e-12);
}

TEST(Sigma, ConfigValidation) {
  EXPECT_THROW(config(Variant::kZ1, 0, 1).validate(), DomainError);
  EXPECT_THROW(config(Variant::kZ1, 4, -1).validate(), DomainError);
  EXPECT_THROW(config(Variant::kZ1, 4, 1, 1.5).validate(), DomainError);
  EXPECT_NO_THROW(config(Variant::kZ2, 4, 0, 1.0).validate());
}

TEST(Sigma, KernelResidualVanishes) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.05, 5.0);
  for (int i = 0; i < 20; ++i) {
    const double z = d(rng);
    const double t = d(rng);
    EXPECT_EQ(sigma::kernel_identity_check(z, t), 0.0);
  }
  EXPECT_THROW(sigma::kernel_identity_check(1.0, 1.0), DomainError);
}
