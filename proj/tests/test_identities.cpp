#include <gtest/gtest.h>

#include <cmath>

#include "ordermap/errors.hpp"
#include "ordermap/identities.hpp"
#include "ordermap/report_io.hpp"
#include "ordermap/suite.hpp"

using namespace ordermap;
using namespace ordermap::identities;

TEST(Identities, Eq2RoundTrip) {
  for (double nu : {0.3, 1.5, 2.0}) {
    const auto r = check_eq2_roundtrip(nu, 1.7);
    EXPECT_TRUE(r.verdict) << nu << " residual " << r.residual;
  }
}

TEST(Identities, Eq3Closure) {
  const auto r = check_eq3_closure(0.7, 3.0);
  EXPECT_TRUE(r.verdict);
  EXPECT_LE(r.residual, 1e-13);
}

TEST(Identities, Eq11Values) {
  const auto r = check_eq11(0.0, 2.0, 200);
  EXPECT_NEAR(r.observed.back(), 0.159952720611639, 1e-12);
  EXPECT_TRUE(r.verdict);
  EXPECT_GE(r.tail_exponent, 1.8);
  EXPECT_LE(r.tail_exponent, 2.2);
  EXPECT_NEAR(check_eq11(0.5, 2.0, 200).observed.back(), 0.170562926027451, 1e-12);
  EXPECT_NEAR(check_eq11(1.0, 3.0, 200).observed.back(), 0.080377263652043, 1e-12);
}

TEST(Identities, Eq11HandCheckOfFirstTerms) {
  // At z = 0 only n >= 0 contribute: terms 2^{n-1} N_{n-1}(2) / (2^n n!).
  double first_eight = 0.0;
  for (int n = 0; n < 8; ++n) {
    const double nm = n == 0 ? -std::cyl_neumann(1, 2.0) : std::cyl_neumann(n - 1, 2.0);
    first_eight += std::pow(2.0, n - 1) * nm / (std::pow(2.0, n) * std::tgamma(n + 1.0));
  }
  EXPECT_NEAR(first_eight, 0.184, 5e-3);
  // observed: N = 1, 2, 5, 10; the partial sums decrease through it.
  const auto r = check_eq11(0.0, 2.0, 10);
  EXPECT_GT(r.observed[2], first_eight);
  EXPECT_LT(r.observed[3], first_eight);
}

TEST(Identities, Eq11TailNegative) {
  const auto r = check_eq11(0.0, 2.0, 200);
  // symmetric terms behave like -1/(2 pi n (n-1))
  EXPECT_LT(r.tail_estimate, 0.0);
  EXPECT_NEAR(r.tail_estimate, -1.0 / (2.0 * M_PI * 200.0), 5e-5);
}

TEST(Identities, Eq11Region) {
  EXPECT_THROW(check_eq11(2.0, 2.0, 200), DomainError);
  EXPECT_THROW(check_eq11(3.0, 2.0, 200), DomainError);
  EXPECT_THROW(check_eq11(0.5, 2.0, 5), DomainError);
}

TEST(Identities, Eq9SharesEq11Sum) {
  const auto eq9 = check_eq9_real(0.5, 2.0, 200);
  const auto eq11 = check_eq11(0.5, 2.0, 200);
  EXPECT_TRUE(eq9.verdict);
  EXPECT_LT(eq9.residual, 5e-3);
  ASSERT_NE(eq9.find_secondary("n_part"), nullptr);
  EXPECT_EQ(eq9.find_secondary("n_part")->residual, eq11.residual);
  EXPECT_TRUE(eq9.find_secondary("hankel_reindex")->passed());
}

TEST(Identities, Eq3PrimeOrderZeroIsExact) {
  const auto r = check_eq3prime_order(0, 0, 16, 12);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.verdict);
}

TEST(Identities, Eq3PrimeOrderOneReportsDistances) {
  const auto r = check_eq3prime_order(0, 1, 16, 12);
  EXPECT_EQ(r.observed.size(), 5u);  // powers 0..4
  // u^0: operator gives 0.443842..., the order derivative -psi(1) - log 2.
  EXPECT_NEAR(r.observed[0], 0.443842079117747 - (0.5772156649015329 - std::log(2.0)), 1e-12);
  EXPECT_DOUBLE_EQ(r.tolerance, 1e-10);
}

TEST(Identities, Eq3PrimeRejectsBadTruncation) {
  EXPECT_THROW(check_eq3prime_order(0, 1, 6, 4), DomainError);
  EXPECT_THROW(check_eq3prime_order(0, 1, 16, 20), DomainError);
}

TEST(Identities, Eq14Kernel) {
  const auto r = check_eq14_kernel(0.7, 2.3);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.verdict);
}

TEST(Identities, Eq15OrderZeroReproducesSeries) {
  const auto r = check_eq15_order(0, 0, 16, 12, {2.0});
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_TRUE(r.verdict);
}

TEST(Identities, Eq15ProbeDomain) {
  EXPECT_THROW(check_eq15_order(0, 1, 16, 12, {5.0}), DomainError);
  EXPECT_THROW(check_eq15_order(-1, 1, 16, 12, {1.0}), DomainError);
}

TEST(Identities, Eq18RecombinationIsExact) {
  const auto r = check_eq18_order(1, 0, 1, 16, 12, {1.0});
  ASSERT_NE(r.find_secondary("recombination"), nullptr);
  EXPECT_LE(r.find_secondary("recombination")->residual, 1e-12);
}

TEST(Identities, Eq18KindsAreConjugate) {
  const auto a = check_eq18_order(1, 0, 0, 16, 12, {0.5, 1.0});
  const auto b = check_eq18_order(2, 0, 0, 16, 12, {0.5, 1.0});
  EXPECT_EQ(a.observed, b.observed);
}

TEST(Identities, IntegerShiftAtLambdaZero) {
  const auto r = check_integer_shift(0, 16, 12, {2, 4}, 1.0, 0.0);
  const double expected =
      std::abs(std::cyl_neumann(0, 1.0) - 1.0 * std::cyl_neumann(1, 1.0));
  EXPECT_NEAR(r.observed[0], expected, 1e-8);
  EXPECT_EQ(r.observed[0], r.observed[1]);
  EXPECT_EQ(r.residual, 1.0);
  EXPECT_FALSE(r.verdict);
}

TEST(Identities, ChecksAreDeterministic) {
  EXPECT_EQ(io::report_json(check_eq11(0.5, 2.0, 200)), io::report_json(check_eq11(0.5, 2.0, 200)));
  EXPECT_EQ(io::report_json(check_eq15_order(1, 1, 16, 12, {0.5, 1.0, 2.0})),
            io::report_json(check_eq15_order(1, 1, 16, 12, {0.5, 1.0, 2.0})));
}

TEST(Suite, SortedAndOrderIndependent) {
  suite::SuiteOptions o;
  o.N = 50;
  const auto checks = suite::battery(o);
  const auto serial = suite::run(checks, 1);
  const auto parallel = suite::run(checks, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  EXPECT_EQ(io::reports_json(serial), io::reports_json(parallel));
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(), report_less));
}

TEST(Suite, AllPassedIsConjunction) {
  IdentityReport good;
  good.residual = 0.0;
  good.finalize();
  IdentityReport bad;
  bad.residual = 1.0;
  bad.finalize();
  EXPECT_TRUE(suite::all_passed({good, good}));
  EXPECT_FALSE(suite::all_passed({good, bad}));
}

TEST(Report, VerdictFollowsTolerance) {
  IdentityReport r;
  r.residual = 1e-3;
  r.tolerance = 1e-2;
  r.finalize();
  EXPECT_TRUE(r.verdict);
  r.override_tolerance(1e-4);
  EXPECT_FALSE(r.verdict);
  r.residual = std::nan("");
  r.override_tolerance(1.0);
  EXPECT_FALSE(r.verdict);
}

TEST(Report, SecondaryFailureFailsVerdict) {
  IdentityReport r;
  r.secondary.push_back({"x", 2.0, 1.0});
  r.finalize();
  EXPECT_FALSE(r.verdict);
}

TEST(Report, IdentityNames) {
  EXPECT_EQ(parse_identity_id("EQ11"), IdentityId::kEq11Sum);
  EXPECT_EQ(parse_identity_id("eq3p_order_j"), IdentityId::kEq3pOrderJ);
  EXPECT_EQ(to_string(IdentityId::kEq17Shift), "EQ17_SHIFT");
  EXPECT_THROW(parse_identity_id("EQ99"), DomainError);
}
