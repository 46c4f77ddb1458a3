#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Truncated power series in t whose coefficients are polynomials in x.
///
/// A series of order N retains t^0 ... t^{N-1}. Coefficients are ordinary:
/// coeff(n) is [t^n]f. The exponential coefficient a_n of
/// f = sum a_n t^n / n! is recovered with egf_coefficient().
///
/// Binary arithmetic requires equal orders; mismatches throw UsageError
/// instead of truncating.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(int order);
  /// Takes coefficients t^0 .. t^{N-1}; N = coeffs.size() must be positive.
  explicit Series(std::vector<Polynomial> coeffs);

  static Series constant(const Polynomial& value, int order);
  /// The series t (order >= 2 for it to be visible).
  static Series t(int order);
  static Series from_scalars(std::span<const Rational> coeffs);

  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()); }
  [[nodiscard]] const Polynomial& coeff(int n) const;
  [[nodiscard]] const Polynomial& operator[](int n) const { return coeff(n); }
  [[nodiscard]] std::span<const Polynomial> coeffs() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const;
  /// True when no coefficient depends on x.
  [[nodiscard]] bool has_constant_coefficients() const;
  /// Index of the first nonzero coefficient, or -1 for the zero series.
  [[nodiscard]] int valuation() const;
  /// O(f) = 0 with a nonzero scalar constant term.
  [[nodiscard]] bool is_invertible() const;
  /// O(f) = 1 with a scalar t-coefficient.
  [[nodiscard]] bool is_delta() const;

  /// Explicitly drops terms; new_order must not exceed order().
  [[nodiscard]] Series truncated(int new_order) const;
  /// f(t)/t for f with zero constant term; order drops by one.
  [[nodiscard]] Series divided_by_t() const;
  /// f(t)*t; the top retained term is dropped so the order is unchanged.
  [[nodiscard]] Series times_t() const;
  /// f(c t).
  [[nodiscard]] Series scale_argument(const Rational& c) const;
  [[nodiscard]] Series pow(int exponent) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& rhs);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend Series operator*(Series lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Series operator*(const Rational& lhs, Series rhs) { return rhs *= lhs; }
  friend Series operator-(Series f);

  friend bool operator==(const Series&, const Series&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Series& f);

 private:
  std::vector<Polynomial> coeffs_;
};

Series add(const Series& lhs, const Series& rhs);
Series mul(const Series& lhs, const Series& rhs);
/// g with f*g = 1; the constant term of f must be a nonzero scalar.
Series mul_inverse(const Series& f);
/// outer(inner(t)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);
/// Compositional inverse of a delta series, by degree-by-degree solve of
/// compose(result, f) = t.
Series revert(const Series& f);

/// log(1 + t/a).
Series log1p_scaled(const Rational& a, int order);
Series exp_series(int order);
Series exp_neg_series(int order);
/// e^{c t} for a polynomial c (a scalar, or x for e^{xt}).
Series exp_scaled(const Polynomial& c, int order);
/// (1 + t/a)^e with [t^n] = binom(e, n) / a^n, e any polynomial in x.
Series binomial_pow(const Rational& a, const Polynomial& exponent, int order);

/// n! [t^n] f.
Polynomial egf_coefficient(const Series& f, int n);
/// Term-wise d/dt; the result has order N-1.
Series derivative_t(const Series& f);

}  // namespace umbra
