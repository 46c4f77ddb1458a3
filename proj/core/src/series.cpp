#include "umbra/series.hpp"

#include <ostream>
#include <string>

#include "umbra/errors.hpp"

namespace umbra {

namespace {

void require_order(int order) {
  if (order < 1) throw UsageError("series order must be positive, got " + std::to_string(order));
}

void require_same_order(const Series& lhs, const Series& rhs, const char* op) {
  if (lhs.order() != rhs.order())
    throw UsageError(std::string(op) + ": series order mismatch (" + std::to_string(lhs.order()) + " vs " +
                     std::to_string(rhs.order()) + ")");
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order));
}

Series::Series(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) { require_order(order()); }

Series Series::constant(const Polynomial& value, int order) {
  Series f(order);
  f.coeffs_[0] = value;
  return f;
}

Series Series::t(int order) {
  Series f(order);
  if (order > 1) f.coeffs_[1] = 1;
  return f;
}

Series Series::from_scalars(std::span<const Rational> coeffs) {
  std::vector<Polynomial> c(coeffs.begin(), coeffs.end());
  return Series(std::move(c));
}

const Polynomial& Series::coeff(int n) const {
  if (n < 0 || n >= order())
    throw OrderExhausted("coefficient t^" + std::to_string(n) + " outside series of order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n)];
}

bool Series::is_zero() const { return valuation() < 0; }

bool Series::has_constant_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_constant()) return false;
  return true;
}

int Series::valuation() const {
  for (int n = 0; n < order(); ++n)
    if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) return n;
  return -1;
}

bool Series::is_invertible() const { return !coeffs_[0].is_zero() && coeffs_[0].is_constant(); }

bool Series::is_delta() const {
  return order() >= 2 && coeffs_[0].is_zero() && !coeffs_[1].is_zero() && coeffs_[1].is_constant();
}

Series Series::truncated(int new_order) const {
  require_order(new_order);
  if (new_order > order())
    throw OrderExhausted("cannot extend a series of order " + std::to_string(order()) + " to " +
                         std::to_string(new_order));
  return Series(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + new_order));
}

Series Series::divided_by_t() const {
  if (!coeffs_[0].is_zero()) throw DomainError("series with nonzero constant term is not divisible by t");
  if (order() < 2) throw OrderExhausted("dividing an order-1 series by t leaves no terms");
  return Series(std::vector<Polynomial>(coeffs_.begin() + 1, coeffs_.end()));
}

Series Series::times_t() const {
  Series f(order());
  for (int n = 1; n < order(); ++n) f.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n) - 1];
  return f;
}

Series Series::scale_argument(const Rational& c) const {
  Series f = *this;
  Rational power = 1;
  for (auto& coeff : f.coeffs_) {
    coeff *= power;
    power *= c;
  }
  return f;
}

Series Series::pow(int exponent) const {
  if (exponent < 0) return mul_inverse(*this).pow(-exponent);
  Series result = constant(1, order());
  Series base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(*this, rhs, "add");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(*this, rhs, "subtract");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

Series& Series::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  require_same_order(lhs, rhs, "mul");
  const std::size_t order = lhs.coeffs_.size();
  Series out(static_cast<int>(order));
  for (std::size_t i = 0; i < order; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

Series operator-(Series f) {
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

std::ostream& operator<<(std::ostream& os, const Series& f) {
  os << "[";
  for (int n = 0; n < f.order(); ++n) os << (n ? ", " : "") << f.coeffs_[static_cast<std::size_t>(n)];
  return os << " | O(t^" << f.order() << ")]";
}

Series add(const Series& lhs, const Series& rhs) { return lhs + rhs; }

Series mul(const Series& lhs, const Series& rhs) { return lhs * rhs; }

Series mul_inverse(const Series& f) {
  if (!f.is_invertible()) throw DomainError("series is not invertible: constant term must be a nonzero scalar");
  const int order = f.order();
  const Rational inv0 = f[0].constant_term().reciprocal();
  std::vector<Polynomial> g(static_cast<std::size_t>(order));
  g[0] = inv0;
  for (int n = 1; n < order; ++n) {
    Polynomial acc;
    for (int j = 1; j <= n; ++j)
      if (!f[j].is_zero()) acc += f[j] * g[static_cast<std::size_t>(n - j)];
    g[static_cast<std::size_t>(n)] = acc * (-inv0);
  }
  return Series(std::move(g));
}

Series compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner, "compose");
  if (!inner[0].is_zero()) throw DomainError("compose: inner series must have zero constant term");
  const int order = outer.order();
  Series acc = Series::constant(outer[order - 1], order);
  for (int n = order - 2; n >= 0; --n) {
    acc = acc * inner;
    acc += Series::constant(outer[n], order);
  }
  return acc;
}

Series revert(const Series& f) {
  if (!f.is_delta()) throw DomainError("revert: series is not a delta series");
  const int order = f.order();
  const Rational f1 = f[1].constant_term();
  // powers[j] = f^j; [t^n] compose(g, f) = sum_{j<=n} g_j [t^n] f^j.
  std::vector<Series> powers;
  powers.reserve(static_cast<std::size_t>(order));
  powers.push_back(Series::constant(1, order));
  for (int j = 1; j < order; ++j) powers.push_back(powers.back() * f);

  std::vector<Polynomial> g(static_cast<std::size_t>(order));
  for (int n = 1; n < order; ++n) {
    Polynomial rhs = (n == 1) ? Polynomial(1) : Polynomial();
    for (int j = 1; j < n; ++j) rhs -= g[static_cast<std::size_t>(j)] * powers[static_cast<std::size_t>(j)][n];
    g[static_cast<std::size_t>(n)] = rhs * f1.pow(n).reciprocal();
  }
  return Series(std::move(g));
}

Series log1p_scaled(const Rational& a, int order) {
  if (a.is_zero()) throw DomainError("log1p_scaled: a must be nonzero");
  require_order(order);
  std::vector<Polynomial> c(static_cast<std::size_t>(order));
  const Rational inv_a = a.reciprocal();
  Rational power = 1;
  for (int n = 1; n < order; ++n) {
    power *= inv_a;
    c[static_cast<std::size_t>(n)] = power * Rational(neg_one_pow(n - 1), n);
  }
  return Series(std::move(c));
}

Series exp_series(int order) { return exp_scaled(1, order); }

Series exp_neg_series(int order) { return exp_scaled(-1, order); }

Series exp_scaled(const Polynomial& c, int order) {
  require_order(order);
  std::vector<Polynomial> out(static_cast<std::size_t>(order));
  out[0] = 1;
  for (int n = 1; n < order; ++n) out[static_cast<std::size_t>(n)] = out[static_cast<std::size_t>(n) - 1] * c * Rational(1, n);
  return Series(std::move(out));
}

Series binomial_pow(const Rational& a, const Polynomial& exponent, int order) {
  if (a.is_zero()) throw DomainError("binomial_pow: a must be nonzero");
  require_order(order);
  const Rational inv_a = a.reciprocal();
  std::vector<Polynomial> out(static_cast<std::size_t>(order));
  out[0] = 1;
  for (int n = 1; n < order; ++n) {
    // binom(e, n) = binom(e, n-1) * (e - n + 1) / n
    Polynomial factor = exponent - Polynomial(n - 1);
    out[static_cast<std::size_t>(n)] = out[static_cast<std::size_t>(n) - 1] * factor * (inv_a * Rational(1, n));
  }
  return Series(std::move(out));
}

Polynomial egf_coefficient(const Series& f, int n) {
  if (n < 0 || n >= f.order())
    throw OrderExhausted("egf_coefficient: index " + std::to_string(n) + " outside series of order " +
                         std::to_string(f.order()));
  return f[n] * factorial(n);
}

Series derivative_t(const Series& f) {
  if (f.order() < 2) throw OrderExhausted("derivative_t: an order-1 series has no derivative terms");
  std::vector<Polynomial> out(static_cast<std::size_t>(f.order() - 1));
  for (int n = 1; n < f.order(); ++n) out[static_cast<std::size_t>(n - 1)] = f[n] * Rational(n);
  return Series(std::move(out));
}

}  // namespace umbra
