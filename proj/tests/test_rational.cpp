#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

using umbra::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3/7"), Rational(3, 7));
  EXPECT_EQ(Rational::parse("-5/2"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+4"), Rational(4));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_FALSE(Rational::try_parse("1/0"));
  EXPECT_FALSE(Rational::try_parse("abc"));
  EXPECT_FALSE(Rational::try_parse(""));
  EXPECT_FALSE(Rational::try_parse("1.5"));
  EXPECT_THROW(Rational::parse("x"), umbra::UsageError);
}

TEST(Rational, FormatsCanonically) {
  EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_EQ(Rational(4).fraction_str(), "4/1");
  EXPECT_EQ(Rational(3, -9).fraction_str(), "-1/3");
}

TEST(Rational, ArithmeticAndPowers) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(-1, 2).pow(3), Rational(-1, 8));
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_THROW((void)(Rational(1) / Rational(0)), umbra::DomainError);
  EXPECT_THROW((void)Rational(0).pow(-1), umbra::DomainError);
  EXPECT_LT(Rational(-5, 2), Rational(-1));
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(umbra::factorial(0), Rational(1));
  EXPECT_EQ(umbra::factorial(10), Rational(3628800));
  EXPECT_EQ(umbra::binomial(5, 2), Rational(10));
  EXPECT_EQ(umbra::binomial(5, 6), Rational(0));
  EXPECT_EQ(umbra::binomial(5, -1), Rational(0));
}

TEST(Rational, Int64ViewsDetectOverflow) {
  EXPECT_EQ(Rational(-3, 4).numerator_i64(), -3);
  EXPECT_EQ(Rational(-3, 4).denominator_i64(), 4);
  const Rational huge = umbra::factorial(25);
  EXPECT_FALSE(huge.numerator_i64());
  EXPECT_EQ(huge.numerator_string(), "15511210043330985984000000");
}

TEST(RationalProperty, FieldAxiomsOnRandomSamples) {
  oracle::RationalSource src(20240611);
  for (int i = 0; i < 200; ++i) {
    const Rational a = src.next(), b = src.next(), c = src.nonzero();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a / c) * c, a);
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}
