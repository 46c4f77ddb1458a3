#pragma once

#include <span>
#include <string>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"

namespace umbra {

/// A pair (g, f) with g invertible and f delta, both scalar-coefficient,
/// determining the Sheffer sequence s_n(x) ~ (g, f) by
///
///   <g(t) f(t)^k | s_n(x)> = n! delta_{n,k}.
///
/// The compositional inverse of f is computed once at construction.
class ShefferPair {
 public:
  ShefferPair(Series g, Series f, std::string label = {});

  [[nodiscard]] const Series& g() const { return g_; }
  [[nodiscard]] const Series& f() const { return f_; }
  [[nodiscard]] const Series& f_bar() const { return f_bar_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  /// Working truncation order; s_n is available for n < order().
  [[nodiscard]] int order() const { return f_.order(); }
  /// True when g = 1, i.e. the sequence is associated to f.
  [[nodiscard]] bool is_associated() const;

 private:
  Series g_;
  Series f_;
  Series f_bar_;
  std::string label_;
};

/// <f(t) | p(x)> = sum_n n! [t^n]f [x^n]p. f must have scalar coefficients.
Rational apply_functional(const Series& f, const Polynomial& p);

/// f(t) acting on p with t = d/dx: sum_k [t^k]f p^{(k)}(x).
Polynomial operator_apply(const Series& f, const Polynomial& p);

/// (1/g(fbar(t))) e^{x fbar(t)}, with e^{x fbar} = sum_m x^m fbar^m / m!.
Series sheffer_generating_function(const ShefferPair& pair);
Polynomial sheffer_polynomial(const ShefferPair& pair, int n);
/// s_0 .. s_{n_max} from one generating-function expansion.
std::vector<Polynomial> sheffer_sequence(const ShefferPair& pair, int n_max);

/// Checks <g f^k | s_n> = n! delta_{n,k} for all 0 <= n, k <= n_max.
bool sheffer_orthogonality_check(const ShefferPair& pair, int n_max);

/// C_{n,0..n} with s_n = sum_m C_{n,m} r_m, where s ~ source = (g, f) and
/// r ~ target = (h, l):
///
///   C_{n,m} = (1/m!) < h(fbar) / g(fbar) * l(fbar)^m | x^n >.
std::vector<Rational> connection_coefficients(const ShefferPair& source, const ShefferPair& target, int n);

/// s_{n+1} = (x - g'(t)/g(t)) (1/f'(t)) s_n, applied right to left.
Polynomial recurrence_next(const ShefferPair& pair, const Polynomial& s_n);

/// x (f/g)^n x^{-1} p_n for p ~ (1, f) and q ~ (1, g).
Polynomial transfer_apply(const ShefferPair& p_pair, const ShefferPair& q_pair, int n);
/// transfer_apply(p, q, n) == q_n.
bool transfer_check(const ShefferPair& p_pair, const ShefferPair& q_pair, int n);

/// <f | x p(x)> == <d/dt f | p(x)>.
bool derivative_functional_check(const Series& f, const Polynomial& p);

/// f(t) s_n = n s_{n-1} for 1 <= n <= n_max (and f(t) s_0 = 0).
bool lowering_check(const ShefferPair& pair, int n_max);

/// s_n(x + y) = sum_j C(n, j) s_j(x) p_{n-j}(y) with p_n = g(t) s_n, at each
/// sample y, for n <= n_max.
bool addition_check(const ShefferPair& pair, int n_max, std::span<const Rational> y_samples);

/// Frequently used pairs.
namespace pairs {

/// x^n ~ (1, t).
ShefferPair monomial(int order);
/// x^(n) ~ (1, 1 - e^{-t}).
ShefferPair rising(int order);
/// (x)_n ~ (1, e^t - 1).
ShefferPair falling(int order);
/// (-1/a)^n x^(n) ~ (1, a(e^{-t} - 1)).
ShefferPair scaled_rising(const Rational& a, int order);
/// a^{-n} (x)_n ~ (1, a(e^t - 1)).
ShefferPair scaled_falling(const Rational& a, int order);
/// B_n^(s)(x) ~ (((e^t - 1)/t)^s, t).
ShefferPair bernoulli(int s, int order);
/// H_n^(s)(x|lambda) ~ (((e^t - lambda)/(1 - lambda))^s, t).
ShefferPair frobenius_euler(int s, const Rational& lambda, int order);

}  // namespace pairs

}  // namespace umbra
