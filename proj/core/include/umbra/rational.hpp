#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbra {

/// Exact rational number in canonical form (denominator > 0, gcd 1).
///
/// Thin value wrapper over GMP's mpq_class; every constructor and operator
/// leaves the value canonicalized.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of a scalar

  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" (q may be negative, must be nonzero).
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }
  [[nodiscard]] std::optional<std::int64_t> numerator_i64() const;
  [[nodiscard]] std::optional<std::int64_t> denominator_i64() const;

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  /// Always "p/q".
  [[nodiscard]] std::string fraction_str() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// Integer power; negative exponents require a nonzero base.
  [[nodiscard]] Rational pow(long exponent) const;
  [[nodiscard]] Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  mpq_class value_;
};

/// n! as an exact integer-valued rational.
Rational factorial(int n);
/// Binomial coefficient C(n, k) for 0 <= k <= n, zero when k outside [0, n].
Rational binomial(int n, int k);
/// (-1)^n.
inline int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace umbra
