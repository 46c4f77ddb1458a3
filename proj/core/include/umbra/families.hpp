#pragma once

#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/sheffer.hpp"

namespace umbra {

// Every family below is defined by its exponential generating function and
// read off with egf_coefficient(). The *_table variants expand the generating
// function once and return members 0..n_max.

/// e^{-t} (1 + t/a)^x.
Series poisson_charlier_gf(const Rational& a, int order);
Polynomial poisson_charlier(int n, const Rational& a);
std::vector<Polynomial> poisson_charlier_table(const Rational& a, int n_max);

/// Poly-Cauchy polynomials of the first kind: (1+t)^{-x} Lif_k(log(1+t)).
Series poly_cauchy_first_gf(int k, int order);
Polynomial poly_cauchy_first(int n, int k);
std::vector<Polynomial> poly_cauchy_first_table(int k, int n_max);

/// Poly-Cauchy polynomials of the second kind: (1+t)^x Lif_k(-log(1+t)).
Series poly_cauchy_second_gf(int k, int order);
Polynomial poly_cauchy_second(int n, int k);
std::vector<Polynomial> poly_cauchy_second_table(int k, int n_max);

/// Bernoulli polynomials of order r: (t/(e^t - 1))^r e^{xt}.
Series bernoulli_gf(int r, int order);
Polynomial bernoulli_poly(int n, int r);
std::vector<Polynomial> bernoulli_poly_table(int r, int n_max);

/// Frobenius-Euler polynomials of order r: ((1 - lambda)/(e^t - lambda))^r e^{xt}.
Series frobenius_euler_gf(int r, const Rational& lambda, int order);
Polynomial frobenius_euler(int n, int r, const Rational& lambda);
std::vector<Polynomial> frobenius_euler_table(int r, const Rational& lambda, int n_max);

/// Poisson-Charlier / poly-Cauchy mixed type, first kind:
///   e^{-t} Lif_k(log(1 + t/a)) (1 + t/a)^{-x}.
Series pc_mixed_gf(int k, const Rational& a, int order);
Polynomial pc_mixed(int n, int k, const Rational& a);
std::vector<Polynomial> pc_mixed_table(int k, const Rational& a, int n_max);

/// Second kind: e^{-t} Lif_k(-log(1 + t/a)) (1 + t/a)^x.
Series pc_hat_mixed_gf(int k, const Rational& a, int order);
Polynomial pc_hat_mixed(int n, int k, const Rational& a);
std::vector<Polynomial> pc_hat_mixed_table(int k, const Rational& a, int n_max);

/// The first-kind mixed family as a Sheffer sequence:
///   ( e^{a(e^{-t}-1)} / Lif_k(-t),  a(e^{-t} - 1) ).
ShefferPair pc_mixed_pair(int k, const Rational& a, int order);
/// The second-kind mixed family:
///   ( e^{a(e^t-1)} / Lif_k(-t),  a(e^t - 1) ).
ShefferPair pc_hat_mixed_pair(int k, const Rational& a, int order);

/// Members 0..n_max built from the Sheffer pairs instead of the
/// generating functions above.
std::vector<Polynomial> pc_mixed_sheffer_table(int k, const Rational& a, int n_max);
std::vector<Polynomial> pc_hat_mixed_sheffer_table(int k, const Rational& a, int n_max);

}  // namespace umbra
