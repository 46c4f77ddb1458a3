#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/series.hpp"
#include "umbra/special.hpp"

using umbra::Polynomial;
using umbra::Rational;
using umbra::Series;

namespace {

Series scalars(std::initializer_list<Rational> c) { return Series::from_scalars(std::vector<Rational>(c)); }

Series from_vec(const oracle::Vec& v) { return Series::from_scalars(v); }

Series one(int n) { return Series::constant(1, n); }

}  // namespace

TEST(Series, AdditionCancels) {
  EXPECT_EQ(scalars({1, 1, 0}) + scalars({1, -1, 0}), scalars({2, 0, 0}));
  const Series inv_log = umbra::mul_inverse(umbra::log1p_scaled(1, 7).divided_by_t()).times_t();
  EXPECT_TRUE((inv_log + (-inv_log)).is_zero());
}

TEST(Series, OrderMismatchIsAnError) {
  EXPECT_THROW((void)(Series(3) + Series(4)), umbra::UsageError);
  EXPECT_THROW((void)(Series(3) * Series(4)), umbra::UsageError);
}

TEST(Series, Products) {
  EXPECT_EQ(scalars({1, 1, 0, 0}) * scalars({1, -1, 0, 0}), scalars({1, 0, -1, 0}));
  EXPECT_EQ(umbra::exp_series(9) * umbra::exp_neg_series(9), one(9));
  // e^{-t} (1+t)^x to first order: 1 + (x-1) t.
  const Series gf = umbra::exp_neg_series(2) * umbra::binomial_pow(1, Polynomial::x(), 2);
  EXPECT_EQ(gf.coeff(0), Polynomial(1));
  EXPECT_EQ(gf.coeff(1), Polynomial({Rational(-1), Rational(1)}));
}

TEST(Series, MultiplicativeInverse) {
  EXPECT_EQ(umbra::mul_inverse(one(3)), one(3));
  EXPECT_EQ(umbra::mul_inverse(scalars({1, 1, 0, 0})), scalars({1, -1, 1, -1}));
  const Series cauchy = umbra::mul_inverse(umbra::log1p_scaled(1, 5).divided_by_t());
  EXPECT_EQ(cauchy, scalars({1, Rational(1, 2), Rational(-1, 12), Rational(1, 24)}));
  EXPECT_THROW((void)umbra::mul_inverse(Series::t(3)), umbra::DomainError);
}

TEST(Series, Composition) {
  const Series f = scalars({2, 3, 5, 7});
  EXPECT_EQ(umbra::compose(f, Series::t(4)), f);
  for (int n : {1, 2, 5, 12})
    EXPECT_EQ(umbra::compose(umbra::exp_series(n), umbra::log1p_scaled(1, n)), (one(n) + Series::t(n)).truncated(n));
  // Lif_1(log(1+t)) = t / log(1+t).
  const int n = 8;
  const Series lhs = umbra::compose(umbra::lif_series(1, n), umbra::log1p_scaled(1, n));
  const Series rhs = umbra::mul_inverse(umbra::log1p_scaled(1, n + 1).divided_by_t());
  EXPECT_EQ(lhs, rhs);
  EXPECT_THROW((void)umbra::compose(f, one(4)), umbra::DomainError);
}

TEST(Series, Reversion) {
  EXPECT_EQ(umbra::revert(Series::t(5)), Series::t(5));
  EXPECT_EQ(umbra::revert(umbra::exp_series(5) - one(5)), umbra::log1p_scaled(1, 5));
  const Rational a(3);
  const Series f = (umbra::exp_neg_series(5) - one(5)) * a;
  EXPECT_EQ(umbra::revert(f), -umbra::log1p_scaled(a, 5));
}

TEST(Series, LogSeries) {
  EXPECT_EQ(umbra::log1p_scaled(1, 4), scalars({0, 1, Rational(-1, 2), Rational(1, 3)}));
  EXPECT_EQ(umbra::log1p_scaled(2, 3), scalars({0, Rational(1, 2), Rational(-1, 8)}));
  const int n = 7;
  const Series sq = umbra::log1p_scaled(1, n).pow(2);
  for (int l = 0; l < n; ++l)
    EXPECT_EQ(sq.coeff(l), Polynomial(Rational(2) * oracle::stirling1(l, 2) / oracle::factorial(l))) << "l=" << l;
}

TEST(Series, ExpSeries) {
  EXPECT_EQ(umbra::exp_series(1), one(1));
  EXPECT_EQ(umbra::exp_series(4), scalars({1, 1, Rational(1, 2), Rational(1, 6)}));
  EXPECT_EQ(umbra::exp_scaled(Polynomial(Rational(2)), 6), from_vec(oracle::exp(2, 6)));
}

TEST(Series, BinomialPower) {
  EXPECT_EQ(umbra::binomial_pow(1, Polynomial(), 4), one(4));
  const Series s = umbra::binomial_pow(1, Polynomial::x(), 3);
  EXPECT_EQ(s.coeff(1), Polynomial::x());
  EXPECT_EQ(s.coeff(2), Polynomial({Rational(0), Rational(-1, 2), Rational(1, 2)}));
  // (1+t)^{-x}: n! [t^n] = (-1)^n x^(n).
  const Series neg = umbra::binomial_pow(1, -Polynomial::x(), 9);
  for (int n = 0; n < 9; ++n)
    EXPECT_EQ(umbra::egf_coefficient(neg, n), umbra::rising_poly(n) * Rational(umbra::neg_one_pow(n)));
}

TEST(Series, EgfCoefficient) {
  for (int n = 0; n < 6; ++n) EXPECT_EQ(umbra::egf_coefficient(umbra::exp_series(6), n), Polynomial(1));
  const Series cauchy = umbra::mul_inverse(umbra::log1p_scaled(1, 4).divided_by_t());
  EXPECT_EQ(umbra::egf_coefficient(cauchy, 2), Polynomial(Rational(-1, 6)));
  EXPECT_THROW((void)umbra::egf_coefficient(cauchy, 3), umbra::OrderExhausted);
}

TEST(Series, Derivative) {
  EXPECT_TRUE(umbra::derivative_t(one(4)).is_zero());
  EXPECT_EQ(umbra::derivative_t(umbra::exp_series(6)), umbra::exp_series(5));
  EXPECT_THROW((void)umbra::derivative_t(one(1)), umbra::OrderExhausted);
}

// d/dt Lif_k(L) a (1 + t/a) L = Lif_{k-1}(L) - Lif_k(L), L = log(1 + t/a).
TEST(Series, LifDerivativeAfterLog) {
  const int n = 6;
  for (int k : {0, 1, 2}) {
    for (const Rational& a : {Rational(1), Rational(3, 7)}) {
      const Series log_full = umbra::log1p_scaled(a, n);
      const Series log_short = umbra::log1p_scaled(a, n - 1);
      const Series lhs = umbra::derivative_t(umbra::compose(umbra::lif_series(k, n), log_full)) * a *
                         umbra::binomial_pow(a, Polynomial(1), n - 1) * log_short;
      const Series rhs = umbra::compose(umbra::lif_series(k - 1, n - 1), log_short) -
                         umbra::compose(umbra::lif_series(k, n - 1), log_short);
      EXPECT_EQ(lhs, rhs) << "k=" << k << " a=" << a;
    }
  }
}

TEST(SeriesProperty, ProductMatchesNaiveConvolution) {
  oracle::RationalSource src(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = src.integer(1, 10);
    oracle::Vec a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (auto& v : a) v = src.next();
    for (auto& v : b) v = src.next();
    EXPECT_EQ(from_vec(a) * from_vec(b), from_vec(oracle::mul(a, b, n)));
    if (!b[0].is_zero()) EXPECT_EQ(from_vec(a) * umbra::mul_inverse(from_vec(b)), from_vec(oracle::divide(a, b, n)));
  }
}

TEST(SeriesProperty, ComposeMatchesNaiveAndRevertRoundTrips) {
  oracle::RationalSource src(1234);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = src.integer(2, 9);
    oracle::Vec outer(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
    for (auto& v : outer) v = src.next();
    for (std::size_t i = 1; i < inner.size(); ++i) inner[i] = src.next();
    inner[1] = src.nonzero();
    const Series f = from_vec(inner);
    EXPECT_EQ(umbra::compose(from_vec(outer), f), from_vec(oracle::compose(outer, inner, n)));
    const Series f_bar = umbra::revert(f);
    EXPECT_EQ(umbra::compose(f_bar, f), Series::t(n));
    EXPECT_EQ(umbra::compose(f, f_bar), Series::t(n));
  }
}

TEST(SeriesProperty, PowersAgreeWithRepeatedProducts) {
  oracle::RationalSource src(5);
  for (int trial = 0; trial < 20; ++trial) {
    oracle::Vec v(6);
    for (auto& c : v) c = src.next();
    v[0] = src.nonzero();
    const Series f = from_vec(v);
    EXPECT_EQ(f.pow(3), f * f * f);
    EXPECT_EQ(f.pow(-2) * f.pow(2), one(6));
    EXPECT_EQ(f.pow(0), one(6));
  }
}
