#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/families.hpp"
#include "umbra/identities.hpp"
#include "umbra/special.hpp"

using umbra::Polynomial;
using umbra::Rational;

namespace {

const Polynomial X = Polynomial::x();

std::vector<Rational> a_grid() { return {Rational(1), Rational(2), Rational(-1), Rational(3, 7), Rational(-5, 2)}; }

}  // namespace

TEST(PoissonCharlier, LowOrders) {
  const Rational a(3, 7);
  EXPECT_EQ(umbra::poisson_charlier(0, a), Polynomial(1));
  EXPECT_EQ(umbra::poisson_charlier(1, a), X * a.reciprocal() - Polynomial(1));
  EXPECT_EQ(umbra::poisson_charlier(2, 1), Polynomial({Rational(1), Rational(-3), Rational(1)}));
}

TEST(PolyCauchy, FirstOrderTerms) {
  for (int k = -2; k <= 3; ++k) {
    EXPECT_EQ(umbra::poly_cauchy_first(0, k), Polynomial(1));
    EXPECT_EQ(umbra::poly_cauchy_first(1, k), -X + Polynomial(Rational(2).pow(-k)));
    EXPECT_EQ(umbra::poly_cauchy_second(1, k), X - Polynomial(Rational(2).pow(-k)));
  }
}

TEST(PolyCauchy, ConstantTermsAreCauchyNumbersAtKEqualsOne) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(umbra::poly_cauchy_first(n, 1).constant_term(), umbra::cauchy_first(n, 1));
    EXPECT_EQ(umbra::poly_cauchy_second(n, 1).constant_term(), umbra::cauchy_second(n, 1));
  }
}

TEST(Bernoulli, Polynomials) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(umbra::bernoulli_poly(n, 0), Polynomial::monomial(n));
  EXPECT_EQ(umbra::bernoulli_poly(1, 1), X - Polynomial(Rational(1, 2)));
  EXPECT_EQ(umbra::bernoulli_poly(2, 1), Polynomial({Rational(1, 6), Rational(-1), Rational(1)}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(umbra::bernoulli_poly(n, 3)(Rational(0)), umbra::bernoulli_order(n, 3));
}

TEST(FrobeniusEuler, Polynomials) {
  for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 2)}) {
    EXPECT_EQ(umbra::frobenius_euler(0, 2, lambda), Polynomial(1));
    EXPECT_EQ(umbra::frobenius_euler(1, 1, lambda), X - Polynomial((Rational(1) - lambda).reciprocal()));
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(umbra::frobenius_euler(n, 0, lambda), Polynomial::monomial(n));
  }
  EXPECT_THROW((void)umbra::frobenius_euler(2, 1, 1), umbra::DomainError);
}

TEST(MixedFamilies, LowOrders) {
  for (const Rational& a : a_grid()) {
    for (int k = -2; k <= 3; ++k) {
      EXPECT_EQ(umbra::pc_mixed(0, k, a), Polynomial(1));
      EXPECT_EQ(umbra::pc_hat_mixed(0, k, a), Polynomial(1));
      const Rational c = (a * Rational(2).pow(k)).reciprocal();
      EXPECT_EQ(umbra::pc_mixed(1, k, a), Polynomial({Rational(-1) + c, -a.reciprocal()}));
      EXPECT_EQ(umbra::pc_hat_mixed(1, k, a), Polynomial({Rational(-1) - c, a.reciprocal()}));
      for (int n = 0; n <= 6; ++n) EXPECT_EQ(umbra::pc_mixed(n, k, a).leading(), (-a).pow(-n));
    }
  }
  EXPECT_EQ(umbra::pc_mixed(1, 1, 1), Polynomial({Rational(-1, 2), Rational(-1)}));
  EXPECT_THROW((void)umbra::pc_mixed(1, 1, 0), umbra::DomainError);
}

TEST(MixedFamilies, PointValuesMatchScalarOracle) {
  const int n = 8;
  for (const Rational& a : {Rational(2), Rational(-5, 2)}) {
    for (int k : {-2, 1, 3}) {
      const auto first = umbra::pc_mixed_table(k, a, n - 1);
      const auto second = umbra::pc_hat_mixed_table(k, a, n - 1);
      for (const Rational& x0 : {Rational(0), Rational(-1), Rational(5, 3)}) {
        const auto v1 = oracle::pc_mixed_values(k, a, x0, n, false);
        const auto v2 = oracle::pc_mixed_values(k, a, x0, n, true);
        for (int i = 0; i < n; ++i) {
          EXPECT_EQ(first[static_cast<std::size_t>(i)](x0), v1[static_cast<std::size_t>(i)]);
          EXPECT_EQ(second[static_cast<std::size_t>(i)](x0), v2[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
}

TEST(MixedFamilies, ThreeRoutesAgree) {
  for (const Rational& a : a_grid()) {
    for (int k = -2; k <= 3; ++k) {
      const auto gf1 = umbra::pc_mixed_table(k, a, 8);
      const auto gf2 = umbra::pc_hat_mixed_table(k, a, 8);
      const auto sh1 = umbra::pc_mixed_sheffer_table(k, a, 8);
      const auto sh2 = umbra::pc_hat_mixed_sheffer_table(k, a, 8);
      for (int n = 0; n <= 8; ++n) {
        const auto i = static_cast<std::size_t>(n);
        EXPECT_EQ(gf1[i], sh1[i]);
        EXPECT_EQ(gf1[i], umbra::pc_mixed_explicit(n, k, a));
        EXPECT_EQ(gf2[i], sh2[i]);
        EXPECT_EQ(gf2[i], umbra::pc_hat_mixed_explicit(n, k, a));
      }
    }
  }
}

TEST(MixedFamilies, TablesMatchSingleMembers) {
  const auto table = umbra::pc_hat_mixed_table(2, Rational(3, 7), 5);
  ASSERT_EQ(table.size(), 6u);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(table[static_cast<std::size_t>(n)], umbra::pc_hat_mixed(n, 2, Rational(3, 7)));
}
