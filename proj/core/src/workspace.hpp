#pragma once

#include <map>
#include <utility>
#include <vector>

#include "umbra/identities.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra::detail {

/// Lazily filled tables for one (k, a) slice of a verification run. Not
/// thread-safe; each worker owns its own instance.
class Workspace {
 public:
  Workspace(int k, Rational a, int n_max);

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Tables cover indices 0..capacity().
  [[nodiscard]] int capacity() const { return n_max_ + 2; }

  /// PC_n^(kk)(x:a) and PC^_n^(kk)(x:a) by generating-function extraction.
  const Polynomial& pc(int kk, int n);
  const Polynomial& pc_hat(int kk, int n);
  /// Values at rational points, memoized per (kk, point).
  const Rational& pc_at(int kk, int n, const Rational& x);
  const Rational& pc_hat_at(int kk, int n, const Rational& x);

  /// Poly-Cauchy polynomials of both kinds (index k only).
  const Polynomial& poly_cauchy_first(int n);
  const Polynomial& poly_cauchy_second(int n);
  /// Poisson-Charlier C_n(x:a).
  const Polynomial& poisson_charlier(int n);

  /// Cauchy numbers of order r, both kinds.
  const Rational& cauchy_first(int r, int n);
  const Rational& cauchy_second(int r, int n);
  /// Bernoulli numbers of order r.
  const Rational& bernoulli_number(int r, int n);

  /// B_n^(s)(x) and H_n^(s)(x|lambda).
  const Polynomial& bernoulli_poly(int s, int n);
  const Polynomial& frobenius_euler(int s, const Rational& lambda, int n);

 private:
  using Table = std::vector<Polynomial>;
  using Row = std::vector<Rational>;

  const Table& pc_table(int kk);
  const Table& pc_hat_table(int kk);

  int k_;
  Rational a_;
  int n_max_;
  std::map<int, Table> pc_;
  std::map<int, Table> pc_hat_;
  std::map<std::pair<int, Rational>, Row> pc_values_;
  std::map<std::pair<int, Rational>, Row> pc_hat_values_;
  Table poly_cauchy_first_;
  Table poly_cauchy_second_;
  Table poisson_charlier_;
  std::map<int, Row> cauchy_first_;
  std::map<int, Row> cauchy_second_;
  std::map<int, Row> bernoulli_numbers_;
  std::map<int, Table> bernoulli_polys_;
  std::map<std::pair<int, Rational>, Table> frobenius_;
};

/// verify() against a caller-owned workspace; the workspace must match
/// params.k and params.a and have n_max >= n.
VerificationResult verify_in(Workspace& ws, IdentityId id, int n, const ParamPoint& params);

}  // namespace umbra::detail
