#pragma once

#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"

namespace umbra {

enum class StirlingKind { FirstSigned, Second };

/// Triangular table of Stirling numbers built by recurrence.
///
///   first (signed): S1(n+1, k) = S1(n, k-1) - n S1(n, k)
///   second:         S2(n+1, k) = k S2(n, k) + S2(n, k-1)
///
/// extend_to() appends rows; existing rows are never rebuilt.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind, int n_max = 0);

  [[nodiscard]] StirlingKind kind() const { return kind_; }
  [[nodiscard]] int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  void extend_to(int n_max);
  /// Entry (n, k); throws DomainError unless 0 <= k <= n <= n_max().
  [[nodiscard]] const Rational& at(int n, int k) const;

 private:
  StirlingKind kind_;
  std::vector<std::vector<Rational>> rows_;
};

/// Signed Stirling number of the first kind: [x^k] (x)_n.
Rational stirling1(int n, int k);
/// Stirling number of the second kind.
Rational stirling2(int n, int k);

/// Cauchy numbers of the first kind of order r: n! [t^n] (t / log(1+t))^r.
Rational cauchy_first(int n, int r);
/// Cauchy numbers of the second kind of order r: n! [t^n] (t / ((1+t) log(1+t)))^r.
Rational cauchy_second(int n, int r);
/// Bernoulli numbers of order r: n! [t^n] (t / (e^t - 1))^r.
Rational bernoulli_order(int n, int r);

/// Rows 0..n_max of the above, extracted from a single series expansion.
std::vector<Rational> cauchy_first_row(int r, int n_max);
std::vector<Rational> cauchy_second_row(int r, int n_max);
std::vector<Rational> bernoulli_order_row(int r, int n_max);

/// Lif_k(t) = sum_n t^n / (n! (n+1)^k), any integer k.
Series lif_series(int k, int order);

/// Falling factorial (x)_n = x(x-1)...(x-n+1).
Polynomial falling_poly(int n);
/// Rising factorial x^(n) = x(x+1)...(x+n-1).
Polynomial rising_poly(int n);

}  // namespace umbra
