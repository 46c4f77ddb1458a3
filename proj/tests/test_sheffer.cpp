#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/families.hpp"
#include "umbra/identities.hpp"
#include "umbra/sheffer.hpp"
#include "umbra/special.hpp"

using umbra::Polynomial;
using umbra::Rational;
using umbra::Series;
using umbra::ShefferPair;

namespace {

std::vector<ShefferPair> catalogued_pairs(int order) {
  namespace p = umbra::pairs;
  std::vector<ShefferPair> out{p::monomial(order), p::rising(order), p::falling(order),
                               p::scaled_rising(Rational(3, 7), order), p::scaled_falling(Rational(-2), order),
                               p::bernoulli(2, order), p::frobenius_euler(2, Rational(-1), order)};
  for (int k : {-1, 0, 2}) {
    for (const Rational& a : {Rational(1), Rational(-5, 2)}) {
      out.push_back(umbra::pc_mixed_pair(k, a, order));
      out.push_back(umbra::pc_hat_mixed_pair(k, a, order));
    }
  }
  return out;
}

}  // namespace

TEST(Functional, Monomials) {
  EXPECT_EQ(umbra::apply_functional(Series::t(4).pow(2), Polynomial::monomial(2)), Rational(2));
  EXPECT_EQ(umbra::apply_functional(Series::t(4).pow(2), Polynomial::monomial(3)), Rational(0));
  for (const Rational& y : {Rational(2), Rational(-1, 3)})
    for (int n = 0; n <= 6; ++n)
      EXPECT_EQ(umbra::apply_functional(umbra::exp_scaled(Polynomial(y), n + 1), Polynomial::monomial(n)), y.pow(n));
}

TEST(Operator, DerivativesAndShifts) {
  EXPECT_EQ(umbra::operator_apply(Series::t(4), Polynomial::monomial(3)), Polynomial::monomial(2, 3));
  const Polynomial shifted = umbra::operator_apply(umbra::exp_scaled(Polynomial(2), 4), Polynomial::monomial(3));
  EXPECT_EQ(shifted, Polynomial({Rational(8), Rational(12), Rational(6), Rational(1)}));
  for (int n = 1; n <= 8; ++n) {
    const Series delta = Series::constant(1, n + 1) - umbra::exp_neg_series(n + 1);
    EXPECT_EQ(umbra::operator_apply(delta, umbra::rising_poly(n)), umbra::rising_poly(n - 1) * Rational(n));
  }
}

TEST(ShefferPair, RejectsInvalidSeries) {
  EXPECT_THROW(ShefferPair(Series::t(4), Series::t(4)), umbra::DomainError);
  EXPECT_THROW(ShefferPair(Series::constant(1, 4), Series::constant(1, 4)), umbra::DomainError);
  EXPECT_THROW(ShefferPair(Series::constant(1, 3), Series::t(4)), umbra::UsageError);
}

TEST(ShefferSequence, KnownFamilies) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(umbra::sheffer_polynomial(umbra::pairs::monomial(8), n), Polynomial::monomial(n));
    EXPECT_EQ(umbra::sheffer_polynomial(umbra::pairs::rising(8), n), umbra::rising_poly(n));
    EXPECT_EQ(umbra::sheffer_polynomial(umbra::pairs::falling(8), n), umbra::falling_poly(n));
  }
  EXPECT_EQ(umbra::sheffer_polynomial(umbra::pc_mixed_pair(1, 1, 3), 1),
            Polynomial({Rational(-1, 2), Rational(-1)}));
  EXPECT_THROW((void)umbra::sheffer_polynomial(umbra::pairs::rising(4), 4), umbra::OrderExhausted);
}

TEST(ShefferSequence, OrthogonalityLoweringAdditionRecurrence) {
  const auto ys = umbra::y_samples(8);
  for (const ShefferPair& pair : catalogued_pairs(10)) {
    SCOPED_TRACE(pair.label());
    EXPECT_TRUE(umbra::sheffer_orthogonality_check(pair, 8));
    EXPECT_TRUE(umbra::lowering_check(pair, 8));
    EXPECT_TRUE(umbra::addition_check(pair, 8, ys));
    const auto seq = umbra::sheffer_sequence(pair, 8);
    for (int n = 0; n < 8; ++n)
      EXPECT_EQ(umbra::recurrence_next(pair, seq[static_cast<std::size_t>(n)]), seq[static_cast<std::size_t>(n) + 1]);
  }
  EXPECT_TRUE(umbra::sheffer_orthogonality_check(umbra::pc_mixed_pair(2, 2, 8), 6));
  EXPECT_TRUE(umbra::sheffer_orthogonality_check(umbra::pc_hat_mixed_pair(-1, Rational(3, 7), 8), 6));
}

TEST(Recurrence, ReproducesTenSteps) {
  const ShefferPair first = umbra::pc_mixed_pair(1, 1, 4);
  EXPECT_EQ(umbra::recurrence_next(first, Polynomial(1)), Polynomial({Rational(-1, 2), Rational(-1)}));
  const ShefferPair pair = umbra::pc_hat_mixed_pair(0, 2, 12);
  Polynomial s(1);
  for (int n = 0; n < 10; ++n) s = umbra::recurrence_next(pair, s);
  EXPECT_EQ(s, umbra::sheffer_polynomial(pair, 10));
}

TEST(ConnectionCoefficients, IdentityAndRisingTarget) {
  const ShefferPair p = umbra::pairs::bernoulli(1, 7);
  for (int n = 0; n <= 5; ++n) {
    const auto c = umbra::connection_coefficients(p, p, n);
    for (int m = 0; m <= n; ++m) EXPECT_EQ(c[static_cast<std::size_t>(m)], Rational(m == n ? 1 : 0));
  }
  const auto c = umbra::connection_coefficients(umbra::pc_mixed_pair(1, 1, 3), umbra::pairs::rising(3), 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], Rational(-1, 2));
  EXPECT_EQ(c[1], Rational(-1));
}

TEST(ConnectionCoefficientsProperty, ExpansionReconstructs) {
  oracle::RationalSource src(42);
  const int order = 10;
  for (int trial = 0; trial < 12; ++trial) {
    const auto pool = catalogued_pairs(order);
    const ShefferPair& source = pool[static_cast<std::size_t>(src.integer(0, static_cast<int>(pool.size()) - 1))];
    const ShefferPair& target = pool[static_cast<std::size_t>(src.integer(0, static_cast<int>(pool.size()) - 1))];
    const int n = src.integer(0, 8);
    const auto c = umbra::connection_coefficients(source, target, n);
    const auto basis = umbra::sheffer_sequence(target, n);
    Polynomial sum;
    for (int m = 0; m <= n; ++m) sum.add_scaled(basis[static_cast<std::size_t>(m)], c[static_cast<std::size_t>(m)]);
    EXPECT_EQ(sum, umbra::sheffer_polynomial(source, n)) << source.label() << " -> " << target.label();
  }
}

TEST(Transfer, IdentityAndBernoulliExpansion) {
  const ShefferPair id = umbra::pairs::monomial(8);
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(umbra::transfer_check(id, id, n));
  // q_n = x (t / (e^{-t} - 1))^n x^{n-1} = (-1)^n sum_r C(n-1, r) (-1)^r B_r^(n) x^{n-r}.
  const ShefferPair target = umbra::pairs::scaled_rising(1, 8);
  for (int n = 1; n <= 6; ++n) {
    Polynomial expected;
    for (int r = 0; r <= n - 1; ++r)
      expected += Polynomial::monomial(n - r, umbra::binomial(n - 1, r) * umbra::bernoulli_order(r, n) *
                                                  Rational(umbra::neg_one_pow(n + r)));
    EXPECT_EQ(umbra::transfer_apply(id, target, n), expected) << "n=" << n;
    EXPECT_EQ(expected, umbra::rising_poly(n) * Rational(umbra::neg_one_pow(n)));
  }
  const ShefferPair falling2 = umbra::pairs::scaled_falling(2, 8);
  EXPECT_EQ(umbra::transfer_apply(id, falling2, 3), umbra::falling_poly(3) * Rational(1, 8));
}

TEST(DerivativeFunctional, Samples) {
  EXPECT_TRUE(umbra::derivative_functional_check(Series::t(4).pow(2), Polynomial::x()));
  oracle::RationalSource src(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = src.polynomial(5);
    EXPECT_TRUE(umbra::derivative_functional_check(umbra::exp_neg_series(8), p));
    EXPECT_TRUE(umbra::derivative_functional_check(umbra::lif_series(-1, 8), p));
  }
  // Scalar specialization of the mixed generating function at x = 0.
  const int n = 6;
  const Series f = umbra::exp_neg_series(n + 1) *
                   umbra::compose(umbra::lif_series(2, n + 1), umbra::log1p_scaled(Rational(3, 7), n + 1));
  EXPECT_TRUE(umbra::derivative_functional_check(f, Polynomial::monomial(n - 1)));
}
