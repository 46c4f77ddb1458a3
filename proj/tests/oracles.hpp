#pragma once

// Deliberately naive reference computations. Nothing here goes through
// umbra's Series or special-number code; only Rational is shared.

#include <functional>
#include <random>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace oracle {

using umbra::Rational;
using Vec = std::vector<Rational>;

/// Truncated Cauchy product of two coefficient lists.
inline Vec mul(const Vec& a, const Vec& b, int n) {
  Vec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return out;
}

/// num / den by schoolbook long division, den[0] != 0.
inline Vec divide(const Vec& num, const Vec& den, int n) {
  Vec q(static_cast<std::size_t>(n));
  Vec rem = num;
  rem.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    q[static_cast<std::size_t>(i)] = rem[static_cast<std::size_t>(i)] / den[0];
    for (int j = 0; i + j < n && j < static_cast<int>(den.size()); ++j)
      rem[static_cast<std::size_t>(i + j)] -= q[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(j)];
  }
  return q;
}

inline Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// Taylor coefficients of log(1 + t/a).
inline Vec log1p(const Rational& a, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) v[static_cast<std::size_t>(i)] = Rational(i % 2 == 1 ? 1 : -1, i) / a.pow(i);
  return v;
}

/// e^{c t}.
inline Vec exp(const Rational& c, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = c.pow(i) / factorial(i);
  return v;
}

/// (1 + t/a)^e for a rational exponent e.
inline Vec binomial_series(const Rational& a, const Rational& e, int n) {
  Vec v(static_cast<std::size_t>(n));
  Rational c(1);
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = c / a.pow(i);
    c = c * (e - Rational(i)) / Rational(i + 1);
  }
  return v;
}

/// sum_j outer[j] inner^j, inner[0] == 0.
inline Vec compose(const Vec& outer, const Vec& inner, int n) {
  Vec out(static_cast<std::size_t>(n));
  Vec power(static_cast<std::size_t>(n));
  power[0] = Rational(1);
  for (int j = 0; j < n && j < static_cast<int>(outer.size()); ++j) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] += outer[static_cast<std::size_t>(j)] * power[static_cast<std::size_t>(i)];
    power = mul(power, inner, n);
  }
  return out;
}

/// Lif_k(t) = sum t^m / (m! (m+1)^k).
inline Vec lif(int k, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) v[static_cast<std::size_t>(m)] = Rational(1) / (factorial(m) * Rational(m + 1).pow(k));
  return v;
}

/// Coefficients of prod_{i<n} (x + shift*i) by repeated multiplication.
inline Vec factorial_product(int n, int shift) {
  Vec p{Rational(1)};
  for (int i = 0; i < n; ++i) {
    Vec next(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] += p[j] * Rational(shift * i);
    }
    p = std::move(next);
  }
  return p;
}

/// Signed S1(n,k) as the x^k coefficient of (x)_n.
inline Rational stirling1(int n, int k) {
  const Vec p = factorial_product(n, -1);
  return k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : Rational();
}

/// S2(n,k) by enumerating restricted growth strings.
inline long stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(1, 1);
  return k >= 1 ? count : 0;
}

/// n! [t^n] of a scalar coefficient list.
inline Rational egf(const Vec& v, int n) { return factorial(n) * v[static_cast<std::size_t>(n)]; }

/// PC_n^(k)(x0:a) (or the second kind) evaluated at a rational point by
/// expanding the three generating-function factors with scalar arithmetic.
inline Vec pc_mixed_values(int k, const Rational& a, const Rational& x0, int n, bool second_kind) {
  const Rational c = second_kind ? Rational(-1) : Rational(1);
  Vec log_a = log1p(a, n);
  for (auto& v : log_a) v *= c;
  const Vec factor = mul(exp(Rational(-1), n), compose(lif(k, n), log_a, n), n);
  const Vec gf = mul(factor, binomial_series(a, second_kind ? x0 : -x0, n), n);
  Vec out;
  for (int i = 0; i < n; ++i) out.push_back(egf(gf, i));
  return out;
}

/// Small random rationals for property tests.
class RationalSource {
 public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}
  Rational next(int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng_), den(rng_));
  }
  Rational nonzero(int bound = 9) {
    Rational r;
    while (r.is_zero()) r = next(bound);
    return r;
  }
  umbra::Polynomial polynomial(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng_)) + 1);
    for (auto& v : c) v = next();
    return umbra::Polynomial(std::move(c));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
