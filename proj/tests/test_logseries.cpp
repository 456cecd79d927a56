#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ordermap/errors.hpp"
#include "ordermap/logseries.hpp"

using namespace ordermap;

namespace {

LogPowerSeries random_series(std::mt19937_64& rng, int K) {
  std::uniform_int_distribution<int> power(-3, K);
  std::uniform_int_distribution<int> logs(0, 3);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  LogPowerSeries s(VariableTag::kUofZ, K);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) s.add_term(power(rng), logs(rng), {coef(rng), coef(rng)});
  return s;
}

double max_coef(const LogPowerSeries& s) {
  double m = 0.0;
  for (const auto& [key, c] : s.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST(LogSeries, MonomialDerivative) {
  // d/du [u^3 log^2 u] = 3 u^2 log^2 u + 2 u^2 log u
  const auto s = LogPowerSeries::monomial(VariableTag::kUofZ, 3, 2, 1.0, 10);
  const auto d = derivative(s, 1);
  EXPECT_EQ(d.coefficient(2, 2), Complex(3.0));
  EXPECT_EQ(d.coefficient(2, 1), Complex(2.0));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.k_trunc(), 9);
  EXPECT_EQ(d.reliable_order(), 9);
}

TEST(LogSeries, ConstantDiesUnderDerivative) {
  const auto s = LogPowerSeries::monomial(VariableTag::kUofZ, 0, 0, 5.0, 4);
  EXPECT_TRUE(derivative(s, 1).empty());
}

TEST(LogSeries, AntiderivativeClosedForm) {
  // int u log u du = u^2 log u / 2 - u^2 / 4
  const auto s = LogPowerSeries::monomial(VariableTag::kUofT, 1, 1, 1.0, 6);
  const auto a = antiderivative(s, 1);
  EXPECT_DOUBLE_EQ(a.coefficient(2, 1).real(), 0.5);
  EXPECT_DOUBLE_EQ(a.coefficient(2, 0).real(), -0.25);
  EXPECT_EQ(a.k_trunc(), 7);
}

TEST(LogSeries, AntiderivativeOfInverseRaisesLogPower) {
  const auto s = LogPowerSeries::monomial(VariableTag::kUofZ, -1, 1, 1.0, 4);
  const auto a = antiderivative(s, 1);
  EXPECT_DOUBLE_EQ(a.coefficient(0, 2).real(), 0.5);
  EXPECT_EQ(a.size(), 1u);
}

TEST(LogSeries, DerivativeUndoesAntiderivativeOnRandomSeries) {
  std::mt19937_64 rng(7);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_series(rng, 12);
    for (int m = 1; m <= 3; ++m) {
      const auto back = derivative(antiderivative(s, m), m);
      EXPECT_EQ(back.k_trunc(), s.k_trunc());
      EXPECT_LE(compare_all(back, s), 64.0 * eps * max_coef(s)) << "trial " << trial;
    }
  }
}

TEST(LogSeries, EvaluateMatchesDirectFormula) {
  LogPowerSeries s(VariableTag::kUofZ, 4);
  s.add_term(2, 1, 3.0);
  s.add_term(-1, 0, 0.5);
  const double u = 1.7;
  const Complex v = evaluate(s, u);
  EXPECT_NEAR(v.real(), 3.0 * u * u * std::log(u) + 0.5 / u, 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(LogSeries, EvaluateAtZero) {
  LogPowerSeries plain(VariableTag::kUofZ, 4);
  plain.add_term(0, 0, 2.0);
  plain.add_term(3, 0, 1.0);
  EXPECT_EQ(evaluate(plain, 0.0), Complex(2.0));

  LogPowerSeries logged(VariableTag::kUofZ, 4);
  logged.add_term(1, 1, 1.0);
  EXPECT_THROW(evaluate(logged, 0.0), DomainError);
}

TEST(LogSeries, AddTermRejectsOutOfRange) {
  LogPowerSeries s(VariableTag::kUofZ, 3);
  EXPECT_THROW(s.add_term(4, 0, 1.0), TruncationError);
  EXPECT_THROW(s.add_term(1, 0, std::numeric_limits<double>::quiet_NaN()), NumericError);
}

TEST(LogSeries, ZeroCoefficientsArePruned) {
  LogPowerSeries s(VariableTag::kUofZ, 3);
  s.add_term(1, 0, 2.0);
  s.add_term(1, 0, -2.0);
  EXPECT_TRUE(s.empty());
}

TEST(LogSeries, CompareRespectsReliableOrder) {
  const auto a = LogPowerSeries::monomial(VariableTag::kUofZ, 1, 0, 1.0, 8).with_reliable_order(3);
  const auto b = LogPowerSeries::monomial(VariableTag::kUofZ, 1, 0, 1.5, 8);
  EXPECT_DOUBLE_EQ(compare(a, b, 3), 0.5);
  EXPECT_THROW(compare(a, b, 4), TruncationError);
}

TEST(LogSeries, CompareRejectsMixedVariables) {
  const auto a = LogPowerSeries::monomial(VariableTag::kUofZ, 1, 0, 1.0, 4);
  const auto b = LogPowerSeries::monomial(VariableTag::kUofT, 1, 0, 1.0, 4);
  EXPECT_THROW(compare_all(a, b), DomainError);
}

TEST(LogSeries, ScaleIsComponentwiseExact) {
  std::mt19937_64 rng(11);
  const auto s = random_series(rng, 8);
  const auto scaled = scale(s, 0.3);
  for (const auto& [key, c] : s.terms()) {
    EXPECT_EQ(scaled.coefficient(key.k, key.j), c * 0.3);
  }
}

TEST(LogSeries, AddKeepsSmallerTruncation) {
  const auto a = LogPowerSeries::monomial(VariableTag::kUofZ, 1, 0, 1.0, 8);
  const auto b = LogPowerSeries::monomial(VariableTag::kUofZ, 2, 0, 1.0, 5);
  const auto c = a + b;
  EXPECT_EQ(c.k_trunc(), 5);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE((a - a).empty());
}

TEST(LogSeries, MultiplyMonomialShiftsPowers) {
  const auto a = LogPowerSeries::monomial(VariableTag::kUofZ, 2, 1, 1.0, 6);
  const auto b = multiply_monomial(a, -2, 3.0);
  EXPECT_EQ(b.coefficient(0, 1), Complex(3.0));
}

TEST(LogSeries, VariableTagRoundTrip) {
  EXPECT_EQ(parse_variable_tag(to_string(VariableTag::kUofZ)), VariableTag::kUofZ);
  EXPECT_EQ(parse_variable_tag("u-of-t"), VariableTag::kUofT);
  EXPECT_THROW(parse_variable_tag("x"), DomainError);
}
