#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

/// Dense univariate polynomial in x over the rationals.
///
/// Coefficients are stored lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: scalars embed as constants
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial x() { return monomial(1); }
  static Polynomial monomial(int degree, const Rational& coeff = 1);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^j (zero beyond the degree).
  [[nodiscard]] Rational coeff(int j) const;
  [[nodiscard]] Rational constant_term() const { return coeff(0); }
  [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

  [[nodiscard]] Rational operator()(const Rational& at) const { return eval(at); }
  [[nodiscard]] Rational eval(const Rational& at) const;
  /// Formal d/dx.
  [[nodiscard]] Polynomial derivative() const;
  /// p(x + c).
  [[nodiscard]] Polynomial shift(const Rational& c) const;
  /// p(q(x)).
  [[nodiscard]] Polynomial compose(const Polynomial& inner) const;
  [[nodiscard]] Polynomial times_x() const;
  /// p(x)/x; requires p(0) = 0.
  [[nodiscard]] Polynomial divide_by_x() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  /// this += factor * rhs, without a temporary.
  Polynomial& add_scaled(const Polynomial& rhs, const Rational& factor);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator-(Polynomial p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form such as "-1/2 - x + 3*x^2".
  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace umbra
