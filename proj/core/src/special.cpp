#include "umbra/special.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

#include "umbra/errors.hpp"

namespace umbra {

namespace {

void require_nonnegative(int n, int r, const char* what) {
  if (n < 0 || r < 0) throw DomainError(std::string(what) + ": indices must be nonnegative");
}

// Shared memo tables; reads take a shared lock, growth an exclusive one.
class SharedStirling {
 public:
  explicit SharedStirling(StirlingKind kind) : table_(kind) {}

  Rational get(int n, int k) {
    if (n < 0 || k < 0 || k > n)
      throw DomainError("Stirling number (" + std::to_string(n) + ", " + std::to_string(k) + ") requires 0 <= k <= n");
    {
      std::shared_lock lock(mutex_);
      if (n <= table_.n_max()) return table_.at(n, k);
    }
    std::unique_lock lock(mutex_);
    table_.extend_to(n);
    return table_.at(n, k);
  }

 private:
  std::shared_mutex mutex_;
  StirlingTable table_;
};

SharedStirling& shared_table(StirlingKind kind) {
  static SharedStirling first(StirlingKind::FirstSigned);
  static SharedStirling second(StirlingKind::Second);
  return kind == StirlingKind::FirstSigned ? first : second;
}

std::vector<Rational> egf_row(const Series& f) {
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(f.order()));
  for (int n = 0; n < f.order(); ++n) row.push_back(egf_coefficient(f, n).constant_term());
  return row;
}

// log(1+t)/t, an invertible series.
Series log1p_over_t(int order) { return log1p_scaled(1, order + 1).divided_by_t(); }

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, int n_max) : kind_(kind) {
  rows_.push_back({Rational(1)});
  extend_to(n_max);
}

void StirlingTable::extend_to(int n_max) {
  while (this->n_max() < n_max) {
    const auto& prev = rows_.back();
    const int n = this->n_max();
    std::vector<Rational> row(static_cast<std::size_t>(n) + 2);
    for (int k = 1; k <= n + 1; ++k) {
      const Rational above = k <= n ? prev[static_cast<std::size_t>(k)] : Rational();
      const Rational& diag = prev[static_cast<std::size_t>(k) - 1];
      if (kind_ == StirlingKind::FirstSigned)
        row[static_cast<std::size_t>(k)] = diag - Rational(n) * above;
      else
        row[static_cast<std::size_t>(k)] = Rational(k) * above + diag;
    }
    rows_.push_back(std::move(row));
  }
}

const Rational& StirlingTable::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > n_max())
    throw DomainError("Stirling table entry (" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational stirling1(int n, int k) { return shared_table(StirlingKind::FirstSigned).get(n, k); }

Rational stirling2(int n, int k) { return shared_table(StirlingKind::Second).get(n, k); }

std::vector<Rational> cauchy_first_row(int r, int n_max) {
  require_nonnegative(n_max, r, "cauchy_first");
  return egf_row(mul_inverse(log1p_over_t(n_max + 1)).pow(r));
}

std::vector<Rational> cauchy_second_row(int r, int n_max) {
  require_nonnegative(n_max, r, "cauchy_second");
  const int order = n_max + 1;
  const Series denom = binomial_pow(1, 1, order) * log1p_over_t(order);
  return egf_row(mul_inverse(denom).pow(r));
}

std::vector<Rational> bernoulli_order_row(int r, int n_max) {
  require_nonnegative(n_max, r, "bernoulli_order");
  // (e^t - 1)/t = Lif_1(t)
  return egf_row(mul_inverse(lif_series(1, n_max + 1)).pow(r));
}

Rational cauchy_first(int n, int r) { return cauchy_first_row(r, n).back(); }

Rational cauchy_second(int n, int r) { return cauchy_second_row(r, n).back(); }

Rational bernoulli_order(int n, int r) { return bernoulli_order_row(r, n).back(); }

Series lif_series(int k, int order) {
  if (order < 1) throw UsageError("lif_series: order must be positive");
  std::vector<Polynomial> c(static_cast<std::size_t>(order));
  for (int n = 0; n < order; ++n) c[static_cast<std::size_t>(n)] = (factorial(n) * Rational(n + 1).pow(k)).reciprocal();
  return Series(std::move(c));
}

Polynomial falling_poly(int n) {
  if (n < 0) throw DomainError("falling factorial of negative length");
  Polynomial p = 1;
  for (int i = 0; i < n; ++i) p *= Polynomial{Rational(-i), Rational(1)};
  return p;
}

Polynomial rising_poly(int n) {
  if (n < 0) throw DomainError("rising factorial of negative length");
  Polynomial p = 1;
  for (int i = 0; i < n; ++i) p *= Polynomial{Rational(i), Rational(1)};
  return p;
}

}  // namespace umbra
