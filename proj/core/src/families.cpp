#include "umbra/families.hpp"

#include <string>

#include "umbra/errors.hpp"
#include "umbra/special.hpp"

namespace umbra {

namespace {

void require_nonzero_a(const Rational& a) {
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
}

void require_n(int n) {
  if (n < 0) throw DomainError("family index n must be nonnegative");
}

void require_order_param(int r) {
  if (r < 0) throw DomainError("order parameter r must be nonnegative");
}

std::vector<Polynomial> egf_table(const Series& gf, int n_max) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(egf_coefficient(gf, n));
  return out;
}

// Lif_k(c * log(1 + t/a)).
Series lif_of_log(int k, const Rational& c, const Rational& a, int order) {
  return compose(lif_series(k, order), log1p_scaled(a, order) * c);
}

// e^{a(e^{sign t} - 1)}.
Series exp_of_scaled_exp(const Rational& a, int sign, int order) {
  const Series inner = (exp_scaled(sign, order) - Series::constant(1, order)) * a;
  return compose(exp_series(order), inner);
}

}  // namespace

Series poisson_charlier_gf(const Rational& a, int order) {
  require_nonzero_a(a);
  return exp_neg_series(order) * binomial_pow(a, Polynomial::x(), order);
}

Polynomial poisson_charlier(int n, const Rational& a) {
  require_n(n);
  return egf_coefficient(poisson_charlier_gf(a, n + 1), n);
}

std::vector<Polynomial> poisson_charlier_table(const Rational& a, int n_max) {
  return egf_table(poisson_charlier_gf(a, n_max + 1), n_max);
}

Series poly_cauchy_first_gf(int k, int order) {
  return binomial_pow(1, -Polynomial::x(), order) * lif_of_log(k, 1, 1, order);
}

Polynomial poly_cauchy_first(int n, int k) {
  require_n(n);
  return egf_coefficient(poly_cauchy_first_gf(k, n + 1), n);
}

std::vector<Polynomial> poly_cauchy_first_table(int k, int n_max) {
  return egf_table(poly_cauchy_first_gf(k, n_max + 1), n_max);
}

Series poly_cauchy_second_gf(int k, int order) {
  return binomial_pow(1, Polynomial::x(), order) * lif_of_log(k, -1, 1, order);
}

Polynomial poly_cauchy_second(int n, int k) {
  require_n(n);
  return egf_coefficient(poly_cauchy_second_gf(k, n + 1), n);
}

std::vector<Polynomial> poly_cauchy_second_table(int k, int n_max) {
  return egf_table(poly_cauchy_second_gf(k, n_max + 1), n_max);
}

Series bernoulli_gf(int r, int order) {
  require_order_param(r);
  return mul_inverse(lif_series(1, order)).pow(r) * exp_scaled(Polynomial::x(), order);
}

Polynomial bernoulli_poly(int n, int r) {
  require_n(n);
  return egf_coefficient(bernoulli_gf(r, n + 1), n);
}

std::vector<Polynomial> bernoulli_poly_table(int r, int n_max) { return egf_table(bernoulli_gf(r, n_max + 1), n_max); }

Series frobenius_euler_gf(int r, const Rational& lambda, int order) {
  require_order_param(r);
  if (lambda == Rational(1)) throw DomainError("Frobenius-Euler polynomials require lambda != 1");
  const Series denom = (exp_series(order) - Series::constant(lambda, order)) * (Rational(1) - lambda).reciprocal();
  return mul_inverse(denom).pow(r) * exp_scaled(Polynomial::x(), order);
}

Polynomial frobenius_euler(int n, int r, const Rational& lambda) {
  require_n(n);
  return egf_coefficient(frobenius_euler_gf(r, lambda, n + 1), n);
}

std::vector<Polynomial> frobenius_euler_table(int r, const Rational& lambda, int n_max) {
  return egf_table(frobenius_euler_gf(r, lambda, n_max + 1), n_max);
}

Series pc_mixed_gf(int k, const Rational& a, int order) {
  require_nonzero_a(a);
  return exp_neg_series(order) * lif_of_log(k, 1, a, order) * binomial_pow(a, -Polynomial::x(), order);
}

Polynomial pc_mixed(int n, int k, const Rational& a) {
  require_n(n);
  return egf_coefficient(pc_mixed_gf(k, a, n + 1), n);
}

std::vector<Polynomial> pc_mixed_table(int k, const Rational& a, int n_max) {
  return egf_table(pc_mixed_gf(k, a, n_max + 1), n_max);
}

Series pc_hat_mixed_gf(int k, const Rational& a, int order) {
  require_nonzero_a(a);
  return exp_neg_series(order) * lif_of_log(k, -1, a, order) * binomial_pow(a, Polynomial::x(), order);
}

Polynomial pc_hat_mixed(int n, int k, const Rational& a) {
  require_n(n);
  return egf_coefficient(pc_hat_mixed_gf(k, a, n + 1), n);
}

std::vector<Polynomial> pc_hat_mixed_table(int k, const Rational& a, int n_max) {
  return egf_table(pc_hat_mixed_gf(k, a, n_max + 1), n_max);
}

ShefferPair pc_mixed_pair(int k, const Rational& a, int order) {
  require_nonzero_a(a);
  const Series lif_neg = lif_series(k, order).scale_argument(-1);
  const Series g = exp_of_scaled_exp(a, -1, order) * mul_inverse(lif_neg);
  const Series f = (exp_neg_series(order) - Series::constant(1, order)) * a;
  return {g, f, "pc-mixed(k=" + std::to_string(k) + ",a=" + a.str() + ")"};
}

ShefferPair pc_hat_mixed_pair(int k, const Rational& a, int order) {
  require_nonzero_a(a);
  const Series lif_neg = lif_series(k, order).scale_argument(-1);
  const Series g = exp_of_scaled_exp(a, 1, order) * mul_inverse(lif_neg);
  const Series f = (exp_series(order) - Series::constant(1, order)) * a;
  return {g, f, "pc-hat-mixed(k=" + std::to_string(k) + ",a=" + a.str() + ")"};
}

std::vector<Polynomial> pc_mixed_sheffer_table(int k, const Rational& a, int n_max) {
  return sheffer_sequence(pc_mixed_pair(k, a, n_max + 2), n_max);
}

std::vector<Polynomial> pc_hat_mixed_sheffer_table(int k, const Rational& a, int n_max) {
  return sheffer_sequence(pc_hat_mixed_pair(k, a, n_max + 2), n_max);
}

}  // namespace umbra
