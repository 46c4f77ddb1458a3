#include "umbra/rational.hpp"

#include <ostream>

#include "umbra/errors.hpp"

namespace umbra {

namespace {

std::optional<std::int64_t> to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::optional<Rational> Rational::try_parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) return std::nullopt;
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) return std::nullopt;
    den = parse_integer(den_text);
    if (den == 0) return std::nullopt;
  }
  return Rational(mpq_class(parse_integer(num_text), den));
}

Rational Rational::parse(std::string_view text) {
  auto value = try_parse(text);
  if (!value) throw UsageError("not a rational literal: '" + std::string(text) + "'");
  return *value;
}

std::optional<std::int64_t> Rational::numerator_i64() const { return to_i64(value_.get_num()); }
std::optional<std::int64_t> Rational::denominator_i64() const { return to_i64(value_.get_den()); }

std::string Rational::str() const { return value_.get_str(); }

std::string Rational::fraction_str() const { return numerator_string() + "/" + denominator_string(); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(result));
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(result));
}

}  // namespace umbra
