#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"

using umbra::Polynomial;
using umbra::Rational;

TEST(Polynomial, NormalizesAndReportsDegree) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({Rational(1), Rational(0), Rational(0)}).degree(), 0);
  EXPECT_TRUE(Polynomial({Rational(0), Rational(0)}).is_zero());
  EXPECT_EQ(Polynomial::monomial(3, 2).leading(), Rational(2));
}

TEST(Polynomial, FormatsReadably) {
  EXPECT_EQ(Polynomial({Rational(-1, 2), Rational(-1), Rational(3)}).str(), "-1/2 - x + 3*x^2");
  EXPECT_EQ(Polynomial().str(), "0");
}

TEST(Polynomial, ShiftMatchesComposition) {
  const Polynomial p{Rational(1), Rational(-3), Rational(0), Rational(2)};
  const Rational c(3, 7);
  EXPECT_EQ(p.shift(c), p.compose(Polynomial::x() + Polynomial(c)));
}

TEST(Polynomial, DerivativeAndDivision) {
  const Polynomial p{Rational(0), Rational(2), Rational(3)};
  EXPECT_EQ(p.derivative(), Polynomial({Rational(2), Rational(6)}));
  EXPECT_EQ(p.divide_by_x(), Polynomial({Rational(2), Rational(3)}));
  EXPECT_EQ(p.divide_by_x().times_x(), p);
  EXPECT_THROW((void)Polynomial(1).divide_by_x(), umbra::DomainError);
}

TEST(PolynomialProperty, EvaluationIsARingHomomorphism) {
  oracle::RationalSource src(7);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = src.polynomial(6), q = src.polynomial(6);
    const Rational x = src.next();
    EXPECT_EQ((p * q)(x), p(x) * q(x));
    EXPECT_EQ((p + q)(x), p(x) + q(x));
    EXPECT_EQ(p.compose(q)(x), p(q(x)));
    EXPECT_EQ(p.shift(x)(Rational(0)), p(x));
  }
}

TEST(PolynomialProperty, ProductRuleForDerivative) {
  oracle::RationalSource src(11);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = src.polynomial(5), q = src.polynomial(5);
    EXPECT_EQ((p * q).derivative(), p.derivative() * q + p * q.derivative());
  }
}
