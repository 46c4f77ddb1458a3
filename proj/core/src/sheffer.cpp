#include "umbra/sheffer.hpp"

#include <string>

#include "umbra/errors.hpp"
#include "umbra/special.hpp"

namespace umbra {

namespace {

void require_scalar(const Series& f, const char* op) {
  if (!f.has_constant_coefficients())
    throw DomainError(std::string(op) + ": series must have x-free coefficients");
}

void require_covers(const Series& f, const Polynomial& p, const char* op) {
  if (p.degree() >= f.order())
    throw OrderExhausted(std::string(op) + ": series of order " + std::to_string(f.order()) +
                         " cannot act on a polynomial of degree " + std::to_string(p.degree()));
}

void require_index(const ShefferPair& pair, int n, const char* op) {
  if (n < 0) throw DomainError(std::string(op) + ": negative index");
  if (n >= pair.order())
    throw OrderExhausted(std::string(op) + ": index " + std::to_string(n) + " exhausts pair '" + pair.label() +
                         "' of order " + std::to_string(pair.order()));
}

}  // namespace

ShefferPair::ShefferPair(Series g, Series f, std::string label)
    : g_(std::move(g)), f_(std::move(f)), f_bar_(1), label_(std::move(label)) {
  if (g_.order() != f_.order()) throw UsageError("ShefferPair: g and f must share an order");
  if (!g_.has_constant_coefficients() || !f_.has_constant_coefficients())
    throw DomainError("ShefferPair: g and f must have x-free coefficients");
  if (!g_.is_invertible()) throw DomainError("ShefferPair: g must be an invertible series");
  if (!f_.is_delta()) throw DomainError("ShefferPair: f must be a delta series");
  f_bar_ = revert(f_);
}

bool ShefferPair::is_associated() const { return g_ == Series::constant(1, g_.order()); }

Rational apply_functional(const Series& f, const Polynomial& p) {
  require_scalar(f, "apply_functional");
  require_covers(f, p, "apply_functional");
  Rational acc;
  for (int n = 0; n <= p.degree(); ++n) {
    const Rational fn = f[n].constant_term();
    if (fn.is_zero() || p.coeff(n).is_zero()) continue;
    acc += factorial(n) * fn * p.coeff(n);
  }
  return acc;
}

Polynomial operator_apply(const Series& f, const Polynomial& p) {
  require_scalar(f, "operator_apply");
  require_covers(f, p, "operator_apply");
  Polynomial acc;
  Polynomial derivative = p;
  for (int k = 0; k <= p.degree(); ++k) {
    acc.add_scaled(derivative, f[k].constant_term());
    derivative = derivative.derivative();
  }
  return acc;
}

Series sheffer_generating_function(const ShefferPair& pair) {
  const int order = pair.order();
  const Series g_of_fbar = compose(pair.g(), pair.f_bar());
  const Series exp_x_fbar = compose(exp_scaled(Polynomial::x(), order), pair.f_bar());
  return mul_inverse(g_of_fbar) * exp_x_fbar;
}

Polynomial sheffer_polynomial(const ShefferPair& pair, int n) {
  require_index(pair, n, "sheffer_polynomial");
  return egf_coefficient(sheffer_generating_function(pair), n);
}

std::vector<Polynomial> sheffer_sequence(const ShefferPair& pair, int n_max) {
  require_index(pair, n_max, "sheffer_sequence");
  const Series gf = sheffer_generating_function(pair);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(egf_coefficient(gf, n));
  return out;
}

bool sheffer_orthogonality_check(const ShefferPair& pair, int n_max) {
  const auto seq = sheffer_sequence(pair, n_max);
  Series g_fk = pair.g();
  for (int k = 0; k <= n_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const Rational expected = n == k ? factorial(n) : Rational();
      if (apply_functional(g_fk, seq[static_cast<std::size_t>(n)]) != expected) return false;
    }
    g_fk *= pair.f();
  }
  return true;
}

std::vector<Rational> connection_coefficients(const ShefferPair& source, const ShefferPair& target, int n) {
  require_index(source, n, "connection_coefficients");
  if (source.order() != target.order()) throw UsageError("connection_coefficients: pairs must share an order");
  const Series& fbar = source.f_bar();
  const Series ratio = compose(target.g(), fbar) * mul_inverse(compose(source.g(), fbar));
  const Series l_of_fbar = compose(target.f(), fbar);
  const Polynomial xn = Polynomial::monomial(n);

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  Series term = ratio;
  for (int m = 0; m <= n; ++m) {
    out.push_back(apply_functional(term, xn) / factorial(m));
    term *= l_of_fbar;
  }
  return out;
}

Polynomial recurrence_next(const ShefferPair& pair, const Polynomial& s_n) {
  if (pair.order() < 2) throw OrderExhausted("recurrence_next: pair order too small");
  const int reduced = pair.order() - 1;
  const Series inv_f_prime = mul_inverse(derivative_t(pair.f()));
  const Series log_deriv_g = derivative_t(pair.g()) * mul_inverse(pair.g().truncated(reduced));
  const Polynomial u = operator_apply(inv_f_prime, s_n);
  return u.times_x() - operator_apply(log_deriv_g, u);
}

Polynomial transfer_apply(const ShefferPair& p_pair, const ShefferPair& q_pair, int n) {
  if (n < 1) throw DomainError("transfer_apply: n must be at least 1");
  if (!p_pair.is_associated() || !q_pair.is_associated())
    throw DomainError("transfer_apply: both pairs must be associated (g = 1)");
  if (p_pair.order() != q_pair.order()) throw UsageError("transfer_apply: pairs must share an order");
  const Series ratio = p_pair.f().divided_by_t() * mul_inverse(q_pair.f().divided_by_t());
  const Polynomial p_n = sheffer_polynomial(p_pair, n);
  return operator_apply(ratio.pow(n), p_n.divide_by_x()).times_x();
}

bool transfer_check(const ShefferPair& p_pair, const ShefferPair& q_pair, int n) {
  return transfer_apply(p_pair, q_pair, n) == sheffer_polynomial(q_pair, n);
}

bool derivative_functional_check(const Series& f, const Polynomial& p) {
  return apply_functional(f, p.times_x()) == apply_functional(derivative_t(f), p);
}

bool lowering_check(const ShefferPair& pair, int n_max) {
  const auto seq = sheffer_sequence(pair, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Polynomial lowered = operator_apply(pair.f(), seq[static_cast<std::size_t>(n)]);
    const Polynomial expected = n == 0 ? Polynomial() : seq[static_cast<std::size_t>(n) - 1] * Rational(n);
    if (lowered != expected) return false;
  }
  return true;
}

bool addition_check(const ShefferPair& pair, int n_max, std::span<const Rational> y_samples) {
  const auto seq = sheffer_sequence(pair, n_max);
  std::vector<Polynomial> assoc;
  assoc.reserve(seq.size());
  for (const auto& s : seq) assoc.push_back(operator_apply(pair.g(), s));

  for (const Rational& y : y_samples) {
    for (int n = 0; n <= n_max; ++n) {
      Polynomial rhs;
      for (int j = 0; j <= n; ++j)
        rhs.add_scaled(seq[static_cast<std::size_t>(j)], binomial(n, j) * assoc[static_cast<std::size_t>(n - j)](y));
      if (seq[static_cast<std::size_t>(n)].shift(y) != rhs) return false;
    }
  }
  return true;
}

namespace pairs {

ShefferPair monomial(int order) { return {Series::constant(1, order), Series::t(order), "monomial"}; }

ShefferPair rising(int order) {
  return {Series::constant(1, order), Series::constant(1, order) - exp_neg_series(order), "rising"};
}

ShefferPair falling(int order) {
  return {Series::constant(1, order), exp_series(order) - Series::constant(1, order), "falling"};
}

ShefferPair scaled_rising(const Rational& a, int order) {
  if (a.is_zero()) throw DomainError("scaled_rising: a must be nonzero");
  return {Series::constant(1, order), (exp_neg_series(order) - Series::constant(1, order)) * a,
          "scaled-rising(a=" + a.str() + ")"};
}

ShefferPair scaled_falling(const Rational& a, int order) {
  if (a.is_zero()) throw DomainError("scaled_falling: a must be nonzero");
  return {Series::constant(1, order), (exp_series(order) - Series::constant(1, order)) * a,
          "scaled-falling(a=" + a.str() + ")"};
}

ShefferPair bernoulli(int s, int order) {
  if (s < 0) throw DomainError("bernoulli pair: order s must be nonnegative");
  return {lif_series(1, order).pow(s), Series::t(order), "bernoulli(s=" + std::to_string(s) + ")"};
}

ShefferPair frobenius_euler(int s, const Rational& lambda, int order) {
  if (s < 0) throw DomainError("frobenius_euler pair: order s must be nonnegative");
  if (lambda == Rational(1)) throw DomainError("frobenius_euler pair: lambda must differ from 1");
  const Series base = (exp_series(order) - Series::constant(lambda, order)) * (Rational(1) - lambda).reciprocal();
  return {base.pow(s), Series::t(order), "frobenius-euler(s=" + std::to_string(s) + ",lambda=" + lambda.str() + ")"};
}

}  // namespace pairs

}  // namespace umbra
