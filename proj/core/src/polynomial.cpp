#include "umbra/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "umbra/errors.hpp"

namespace umbra {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw DomainError("monomial of negative degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) c[j - 1] = coeffs_[j] * Rational(static_cast<long>(j));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shift(const Rational& c) const {
  if (c.is_zero() || is_constant()) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::times_x() const {
  if (is_zero()) return {};
  std::vector<Rational> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back();
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::divide_by_x() const {
  if (!constant_term().is_zero()) throw DomainError("polynomial is not divisible by x");
  if (is_zero()) return {};
  return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) { return add_scaled(rhs, 1); }

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return add_scaled(rhs, -1); }

Polynomial& Polynomial::add_scaled(const Polynomial& rhs, const Rational& factor) {
  if (factor.is_zero()) return *this;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  const bool unit = factor == Rational(1);
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
    if (unit)
      coeffs_[j] += rhs.coeffs_[j];
    else
      coeffs_[j] += factor * rhs.coeffs_[j];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(Polynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= degree(); ++j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rational(1);
    if (j == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "x";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace umbra
