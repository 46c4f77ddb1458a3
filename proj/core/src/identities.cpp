#include "umbra/identities.hpp"

#include <string>

#include "umbra/errors.hpp"
#include "umbra/families.hpp"
#include "umbra/series.hpp"
#include "umbra/sheffer.hpp"
#include "umbra/special.hpp"
#include "workspace.hpp"

namespace umbra {

namespace detail {

Workspace::Workspace(int k, Rational a, int n_max) : k_(k), a_(std::move(a)), n_max_(n_max) {
  if (a_.is_zero()) throw UsageError("parameter a must be nonzero");
  if (n_max_ < 0) throw UsageError("n_max must be nonnegative");
}

namespace {

template <typename T>
const T& checked(const std::vector<T>& row, int n) {
  if (n < 0 || n >= static_cast<int>(row.size()))
    throw OrderExhausted("workspace table index " + std::to_string(n) + " out of range");
  return row[static_cast<std::size_t>(n)];
}

}  // namespace

const Workspace::Table& Workspace::pc_table(int kk) {
  auto it = pc_.find(kk);
  if (it == pc_.end()) it = pc_.emplace(kk, pc_mixed_table(kk, a_, capacity())).first;
  return it->second;
}

const Workspace::Table& Workspace::pc_hat_table(int kk) {
  auto it = pc_hat_.find(kk);
  if (it == pc_hat_.end()) it = pc_hat_.emplace(kk, pc_hat_mixed_table(kk, a_, capacity())).first;
  return it->second;
}

const Polynomial& Workspace::pc(int kk, int n) { return checked(pc_table(kk), n); }

const Polynomial& Workspace::pc_hat(int kk, int n) { return checked(pc_hat_table(kk), n); }

const Rational& Workspace::pc_at(int kk, int n, const Rational& x) {
  auto key = std::make_pair(kk, x);
  auto it = pc_values_.find(key);
  if (it == pc_values_.end()) {
    Row row;
    for (const auto& p : pc_table(kk)) row.push_back(p(x));
    it = pc_values_.emplace(std::move(key), std::move(row)).first;
  }
  return checked(it->second, n);
}

const Rational& Workspace::pc_hat_at(int kk, int n, const Rational& x) {
  auto key = std::make_pair(kk, x);
  auto it = pc_hat_values_.find(key);
  if (it == pc_hat_values_.end()) {
    Row row;
    for (const auto& p : pc_hat_table(kk)) row.push_back(p(x));
    it = pc_hat_values_.emplace(std::move(key), std::move(row)).first;
  }
  return checked(it->second, n);
}

const Polynomial& Workspace::poly_cauchy_first(int n) {
  if (poly_cauchy_first_.empty()) poly_cauchy_first_ = poly_cauchy_first_table(k_, capacity());
  return checked(poly_cauchy_first_, n);
}

const Polynomial& Workspace::poly_cauchy_second(int n) {
  if (poly_cauchy_second_.empty()) poly_cauchy_second_ = poly_cauchy_second_table(k_, capacity());
  return checked(poly_cauchy_second_, n);
}

const Polynomial& Workspace::poisson_charlier(int n) {
  if (poisson_charlier_.empty()) poisson_charlier_ = poisson_charlier_table(a_, capacity());
  return checked(poisson_charlier_, n);
}

const Rational& Workspace::cauchy_first(int r, int n) {
  auto it = cauchy_first_.find(r);
  if (it == cauchy_first_.end()) it = cauchy_first_.emplace(r, cauchy_first_row(r, capacity())).first;
  return checked(it->second, n);
}

const Rational& Workspace::cauchy_second(int r, int n) {
  auto it = cauchy_second_.find(r);
  if (it == cauchy_second_.end()) it = cauchy_second_.emplace(r, cauchy_second_row(r, capacity())).first;
  return checked(it->second, n);
}

const Rational& Workspace::bernoulli_number(int r, int n) {
  auto it = bernoulli_numbers_.find(r);
  if (it == bernoulli_numbers_.end())
    it = bernoulli_numbers_.emplace(r, bernoulli_order_row(r, capacity())).first;
  return checked(it->second, n);
}

const Polynomial& Workspace::bernoulli_poly(int s, int n) {
  auto it = bernoulli_polys_.find(s);
  if (it == bernoulli_polys_.end()) it = bernoulli_polys_.emplace(s, bernoulli_poly_table(s, capacity())).first;
  return checked(it->second, n);
}

const Polynomial& Workspace::frobenius_euler(int s, const Rational& lambda, int n) {
  auto key = std::make_pair(s, lambda);
  auto it = frobenius_.find(key);
  if (it == frobenius_.end())
    it = frobenius_.emplace(std::move(key), frobenius_euler_table(s, lambda, capacity())).first;
  return checked(it->second, n);
}

}  // namespace detail

namespace {

using detail::Workspace;
using Id = IdentityId;

Rational s1(int n, int k) { return (n < 0 || k < 0 || k > n) ? Rational() : stirling1(n, k); }

Rational s2(int n, int k) { return (n < 0 || k < 0 || k > n) ? Rational() : stirling2(n, k); }

/// base^{-k} for a positive integer base.
Rational inv_pow(int base, int k) { return Rational(base).pow(-k); }

Rational sign(long e) { return Rational(neg_one_pow(e)); }

VerificationResult make_result(Id id, const ParamPoint& p, int n, const Polynomial& lhs, const Polynomial& rhs) {
  VerificationResult r;
  r.id = id;
  r.params = p;
  r.n = n;
  r.equal = lhs == rhs;
  if (!r.equal) {
    r.lhs = lhs;
    r.rhs = rhs;
  }
  return r;
}

VerificationResult make_audit(Id id, const ParamPoint& p, int n, const Polynomial& printed_lhs,
                              const Polynomial& printed_rhs, bool derivation_ok) {
  VerificationResult r = make_result(id, p, n, printed_lhs, printed_rhs);
  r.as_printed = r.equal;
  r.derivation_form = derivation_ok;
  return r;
}

// a^{-n} sum_j { sum_{m=j}^n sum_{l=0}^{n-m} sign * C(n,l) C(m,j) a^l / (m-j+shift)^k S1(n-l,m) } x^j
// with sign (-1)^{l+j} (first kind) or (-1)^{l+m+j} (second kind).
Polynomial explicit_mixed(int n, int k, const Rational& a, bool second_kind, int shift) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  const Rational scale = a.pow(-n);
  for (int j = 0; j <= n; ++j) {
    Rational acc;
    for (int m = j; m <= n; ++m) {
      const Rational inner = binomial(m, j) * inv_pow(m - j + shift, k);
      for (int l = 0; l <= n - m; ++l) {
        const Rational st = s1(n - l, m);
        if (st.is_zero()) continue;
        const long e = second_kind ? l + m + j : l + j;
        acc += sign(e) * binomial(n, l) * a.pow(l) * inner * st;
      }
    }
    coeffs[static_cast<std::size_t>(j)] = acc * scale;
  }
  return Polynomial(std::move(coeffs));
}

// ---- T1, P2, E30, E31 -------------------------------------------------------

VerificationResult verify_t1(Workspace& ws, int n, const ParamPoint& p) {
  Polynomial rhs;
  for (int l = 0; l <= n; ++l)
    rhs.add_scaled(ws.poly_cauchy_first(l), binomial(n, l) * sign(n - l) * p.a.pow(-l));
  return make_result(Id::T1, p, n, ws.pc(p.k, n), rhs);
}

VerificationResult verify_p2(Workspace& ws, int n, const ParamPoint& p) {
  const Polynomial minus_x = -Polynomial::x();
  Polynomial rhs;
  for (int l = 0; l <= n; ++l) {
    const Rational cauchy_number = ws.poly_cauchy_first(n - l).constant_term();
    rhs.add_scaled(ws.poisson_charlier(l).compose(minus_x), binomial(n, l) * cauchy_number * p.a.pow(-(n - l)));
  }
  return make_result(Id::P2, p, n, ws.pc(p.k, n), rhs);
}

VerificationResult verify_e30(Workspace& ws, int n, const ParamPoint& p) {
  Polynomial rhs;
  for (int l = 0; l <= n; ++l)
    rhs.add_scaled(ws.poly_cauchy_second(l), sign(n - l) * binomial(n, l) * p.a.pow(-l));
  return make_result(Id::E30, p, n, ws.pc_hat(p.k, n), rhs);
}

VerificationResult verify_e31(Workspace& ws, int n, const ParamPoint& p) {
  Polynomial rhs;
  for (int l = 0; l <= n; ++l) {
    const Rational cauchy_number = ws.poly_cauchy_second(l).constant_term();
    rhs.add_scaled(ws.poisson_charlier(n - l), binomial(n, l) * cauchy_number * p.a.pow(-l));
  }
  return make_result(Id::E31, p, n, ws.pc_hat(p.k, n), rhs);
}

// ---- T3, T3H, T4, E41 -------------------------------------------------------

VerificationResult verify_t3(Workspace& ws, int n, const ParamPoint& p) {
  return make_result(Id::T3, p, n, ws.pc(p.k, n), explicit_mixed(n, p.k, p.a, false, 1));
}

VerificationResult verify_t3h(Workspace& ws, int n, const ParamPoint& p) {
  return make_result(Id::T3H, p, n, ws.pc_hat(p.k, n), explicit_mixed(n, p.k, p.a, true, 1));
}

VerificationResult verify_t4(Workspace& ws, int n, const ParamPoint& p) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    Rational acc;
    for (int r = 0; r <= n - l; ++r)
      acc += p.a.pow(-(n - r)) * binomial(n, r) * s1(n - r, l) * ws.pc_at(p.k, r, 0);
    coeffs[static_cast<std::size_t>(l)] = sign(l) * acc;
  }
  return make_result(Id::T4, p, n, ws.pc(p.k, n), Polynomial(std::move(coeffs)));
}

VerificationResult verify_e41(Workspace& ws, int n, const ParamPoint& p) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    Rational acc;
    for (int r = 0; r <= n - l; ++r)
      acc += binomial(n, r) * p.a.pow(-(n - r)) * s1(n - r, l) * ws.pc_hat_at(p.k, r, 0);
    coeffs[static_cast<std::size_t>(l)] = acc;
  }
  return make_result(Id::E41, p, n, ws.pc_hat(p.k, n), Polynomial(std::move(coeffs)));
}

// ---- T5, E48 ----------------------------------------------------------------

// sum over r, l, j of the quadruple-sum coefficient of x^m; the sign exponent
// is (l+m) for the first kind and (r+j+m) for the second.
Polynomial bernoulli_expansion(Workspace& ws, int n, int k, const Rational& a, bool second_kind) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rational acc;
    for (int r = 0; r <= n - m; ++r) {
      const Rational outer = binomial(n - 1, r) * ws.bernoulli_number(n, r);
      if (outer.is_zero()) continue;
      for (int l = 0; l <= n - m - r; ++l) {
        for (int j = 0; j <= n - m - r - l; ++j) {
          const int rest = n - r - j - l;
          const long e = second_kind ? r + j + m : l + m;
          acc += sign(e) * outer * binomial(n - r, j + l) * binomial(rest, m) * a.pow(l) * s2(j + l, l) *
                 inv_pow(rest - m + 1, k);
        }
      }
    }
    coeffs[static_cast<std::size_t>(m)] = acc;
  }
  const Rational scale = second_kind ? (-a.reciprocal()).pow(n) : a.pow(-n);
  return Polynomial(std::move(coeffs)) * scale;
}

VerificationResult verify_t5(Workspace& ws, int n, const ParamPoint& p) {
  return make_result(Id::T5, p, n, ws.pc(p.k, n), bernoulli_expansion(ws, n, p.k, p.a, false));
}

VerificationResult verify_e48(Workspace& ws, int n, const ParamPoint& p) {
  return make_result(Id::E48, p, n, ws.pc_hat(p.k, n), bernoulli_expansion(ws, n, p.k, p.a, true));
}

// ---- E49, E50 ---------------------------------------------------------------

VerificationResult verify_addition(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::E50;
  auto member = [&](int j) -> const Polynomial& { return second_kind ? ws.pc_hat(p.k, j) : ws.pc(p.k, j); };
  // (-1/a)^j y^(j) for the first kind, a^{-j} (y)_j for the second.
  auto weight = [&](int j, const Rational& y) {
    return second_kind ? p.a.pow(-j) * falling_poly(j)(y) : (-p.a.reciprocal()).pow(j) * rising_poly(j)(y);
  };

  const auto samples = y_samples(n);
  for (const Rational& y : samples) {
    const Polynomial lhs = member(n).shift(y);
    Polynomial first_form, second_form;
    for (int j = 0; j <= n; ++j) {
      first_form.add_scaled(member(j), binomial(n, j) * weight(n - j, y));
      second_form.add_scaled(member(n - j), binomial(n, j) * weight(j, y));
    }
    for (const Polynomial* rhs : {&first_form, &second_form}) {
      if (lhs != *rhs) {
        VerificationResult r = make_result(id, p, n, lhs, *rhs);
        r.note = "mismatch at y = " + y.str();
        return r;
      }
    }
  }
  VerificationResult r = make_result(id, p, n, member(n), member(n));
  std::string list;
  for (const auto& y : samples) list += (list.empty() ? "" : ", ") + y.str();
  r.note = "both forms equal at y in {" + list + "}";
  return r;
}

// ---- E51, E52 ---------------------------------------------------------------

VerificationResult verify_e51(Workspace& ws, int n, const ParamPoint& p) {
  const int order = n + 1;
  const Polynomial& current = ws.pc(p.k, n);
  const Polynomial lhs = operator_apply(exp_neg_series(order), current) - current;
  const Polynomial rhs = ws.pc(p.k, n - 1) * (Rational(n) / p.a);
  return make_result(Id::E51, p, n, lhs, rhs);
}

VerificationResult verify_e52(Workspace& ws, int n, const ParamPoint& p) {
  const int order = n + 1;
  const Polynomial shifted = operator_apply(exp_series(order), ws.pc_hat(p.k, n));
  const Polynomial rhs = ws.pc_hat(p.k, n - 1) * (Rational(n) / p.a);
  VerificationResult r = make_result(Id::E52, p, n, shifted - ws.pc_hat(p.k, n), rhs);
  r.as_printed = (shifted - ws.pc(p.k, n)) == rhs;
  r.note = "checked with PC^_n^(k)(x:a) as the second left-hand term";
  return r;
}

// ---- E54, E55 ---------------------------------------------------------------

VerificationResult verify_e54(Workspace& ws, int n, const ParamPoint& p) {
  const Polynomial& current = ws.pc(p.k, n);
  const Polynomial x = Polynomial::x();
  Polynomial rhs = -(x * current.shift(1)) * p.a.reciprocal() - current;
  rhs += explicit_mixed(n, p.k, p.a, false, 2).shift(1) * p.a.reciprocal();
  const Polynomial& next = ws.pc(p.k, n + 1);

  const ShefferPair pair = pc_mixed_pair(p.k, p.a, n + 3);
  const bool derivation = recurrence_next(pair, current) == next;
  VerificationResult r = make_audit(Id::E54, p, n, next, rhs, derivation);
  r.note = "derivation form: Sheffer recurrence on the first-kind pair";
  return r;
}

VerificationResult verify_e55(Workspace& ws, int n, const ParamPoint& p) {
  const Polynomial& current = ws.pc_hat(p.k, n);
  const Polynomial x = Polynomial::x();
  Polynomial rhs = (x * current.shift(-1)) * p.a.reciprocal() - current;
  rhs -= explicit_mixed(n, p.k, p.a, true, 2).shift(-1) * p.a.reciprocal();
  const Polynomial& next = ws.pc_hat(p.k, n + 1);

  const ShefferPair pair = pc_hat_mixed_pair(p.k, p.a, n + 3);
  const bool derivation = recurrence_next(pair, current) == next;
  VerificationResult r = make_audit(Id::E55, p, n, next, rhs, derivation);
  r.note = "derivation form: Sheffer recurrence on the second-kind pair";
  return r;
}

// ---- T6, E60, E61, E62 ------------------------------------------------------

// (n-1)! [t^{n-1}] e^{-t} d/dt[Lif_k(+-log(1+t/a))] (1+t/a)^{-+x}.
Polynomial lif_derivative_term(int n, int k, const Rational& a, bool second_kind) {
  const int order = n + 1;
  const Rational c = second_kind ? -1 : 1;
  const Series lif_log = compose(lif_series(k, order), log1p_scaled(a, order) * c);
  const Series d = derivative_t(lif_log);
  const Polynomial exponent = second_kind ? Polynomial::x() : -Polynomial::x();
  const Series full = exp_neg_series(order - 1) * d * binomial_pow(a, exponent, order - 1);
  return egf_coefficient(full, n - 1);
}

// The part shared by all four statements: -F_{n-1}(x) -+ (1/a) x F_{n-1}(x +- 1).
Polynomial recurrence_head(const Polynomial& previous, const Rational& a, bool second_kind) {
  const Polynomial x = Polynomial::x();
  if (second_kind) return -previous + x * previous.shift(-1) * a.reciprocal();
  return -previous - x * previous.shift(1) * a.reciprocal();
}

VerificationResult verify_t6_family(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::E61 || id == Id::E62;
  const bool cauchy_first_kind = id == Id::E60 || id == Id::E62;
  auto member = [&](int kk, int j) -> const Polynomial& {
    return second_kind ? ws.pc_hat(kk, j) : ws.pc(kk, j);
  };
  const Rational shift = !cauchy_first_kind ? Rational(0) : (second_kind ? Rational(-1) : Rational(1));

  const Polynomial head = recurrence_head(member(p.k, n - 1), p.a, second_kind);
  const Polynomial& lhs = member(p.k, n);

  // index_of_minuend(l) is n-l except in the printed form of E62.
  auto tail = [&](bool printed_e62_index) {
    Polynomial sum;
    for (int l = 0; l <= n - 1; ++l) {
      const Rational cauchy = cauchy_first_kind ? ws.cauchy_first(1, l) : ws.cauchy_second(1, l);
      const int minuend_index = printed_e62_index ? n - 1 : n - l;
      const Polynomial diff = member(p.k - 1, minuend_index).shift(shift) - member(p.k, n - l).shift(shift);
      sum.add_scaled(diff, binomial(n, l) * cauchy * p.a.pow(-l));
    }
    return sum * Rational(1, n);
  };

  const Polynomial printed_rhs = head + tail(id == Id::E62);
  bool derivation = false;
  std::string note;
  if (id == Id::E62) {
    derivation = lhs == head + tail(false);
    note = "derivation form: index n-l in both bracketed terms";
  } else {
    derivation = lhs == head + lif_derivative_term(n, p.k, p.a, second_kind);
    note = "derivation form: last term read off the differentiated generating function";
  }
  VerificationResult r = make_audit(id, p, n, lhs, printed_rhs, derivation);
  r.note = note;
  return r;
}

// ---- T7, E67 ----------------------------------------------------------------

// <e^{-t} Lif_k(c log(1+t/a)) log(1+t/a)^m | x^n> from the series.
Rational log_power_functional(int n, int m, int k, const Rational& a, const Rational& c) {
  const int order = n + 1;
  const Series log_a = log1p_scaled(a, order);
  const Series f = exp_neg_series(order) * compose(lif_series(k, order), log_a * c) * log_a.pow(m);
  return apply_functional(f, Polynomial::monomial(n));
}

VerificationResult verify_t7_family(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::T7;
  const int m = *p.m;
  const int k = p.k;
  const Rational& a = p.a;
  const Rational shift_point = second_kind ? Rational(-1) : Rational(1);
  auto at_zero = [&](int l) -> const Rational& { return second_kind ? ws.pc_hat_at(k, l, 0) : ws.pc_at(k, l, 0); };
  auto at_shift = [&](int kk, int l) -> const Rational& {
    return second_kind ? ws.pc_hat_at(kk, l, shift_point) : ws.pc_at(kk, l, shift_point);
  };
  const Rational inv_m = Rational(1, m);

  // Printed statement, as two rationals.
  Rational printed_lhs, printed_rhs;
  for (int l = 0; l <= n - m; ++l) printed_lhs += binomial(n, l) * a.pow(-(n - l)) * s1(n - l, m) * at_zero(l);
  for (int l = 0; l <= n - 1 - m; ++l)
    printed_lhs += binomial(n - 1, l) * a.pow(-(n - 1 - l)) * s1(n - 1 - l, m) * at_zero(l);
  // The printed second-kind statement carries (k) in its last sum.
  const int last_k = second_kind ? k : k - 1;
  for (int l = 0; l <= n - m; ++l) {
    const Rational w = binomial(n - 1, l) * a.pow(-(n - l)) * s1(n - 1 - l, m - 1);
    printed_rhs += (Rational(1) - inv_m) * w * at_shift(k, l) + inv_m * w * at_shift(last_k, l);
  }

  // Two evaluations of <e^{-t} Lif_k(+-L) L^m | x^n>, L = log(1 + t/a).
  const Rational mf = factorial(m);
  Rational direct;
  for (int l = 0; l <= n - m; ++l) direct += mf * a.pow(-(n - l)) * binomial(n, l) * s1(n - l, m) * at_zero(l);
  Rational split;
  for (int l = 0; l <= n - m - 1; ++l)
    split -= mf * a.pow(-(n - l - 1)) * binomial(n - 1, l) * s1(n - 1 - l, m) * at_zero(l);
  for (int l = 0; l <= n - m; ++l) {
    const Rational w = mf * a.pow(-(n - l)) * binomial(n - 1, l) * s1(n - l - 1, m - 1);
    split += Rational(m - 1, m) * w * at_shift(k, l) + inv_m * w * at_shift(k - 1, l);
  }
  const Rational functional = log_power_functional(n, m, k, a, second_kind ? Rational(-1) : Rational(1));
  const bool derivation = direct == split && direct == functional;

  VerificationResult r = make_audit(id, p, n, Polynomial(printed_lhs), Polynomial(printed_rhs), derivation);
  r.note = second_kind ? "derivation form: Eq. (63) = Eq. (66), both equal to the series functional"
                       : "derivation form: first-kind analogue of Eq. (63) = Eq. (66), both equal to the series "
                         "functional";
  if (!derivation)
    r.note += " [direct=" + direct.str() + " split=" + split.str() + " functional=" + functional.str() + "]";
  return r;
}

// ---- E68, E69 ---------------------------------------------------------------

VerificationResult verify_derivative(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::E69;
  auto member = [&](int j) -> const Polynomial& { return second_kind ? ws.pc_hat(p.k, j) : ws.pc(p.k, j); };
  Polynomial sum;
  for (int l = 0; l <= n - 1; ++l) {
    const Rational w = sign(second_kind ? l - 1 : l) / (Rational(n - l) * factorial(l) * p.a.pow(n - l));
    sum.add_scaled(member(l), w);
  }
  return make_result(id, p, n, member(n).derivative(), sum * (sign(n) * factorial(n)));
}

// ---- T8, E74 ----------------------------------------------------------------

VerificationResult verify_bernoulli_basis(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::E74;
  const int s = *p.s;
  const Rational& a = p.a;
  Polynomial rhs;
  for (int m = 0; m <= n; ++m) {
    Rational coeff;
    for (int l = 0; l <= n - m; ++l) {
      const Rational st = s1(n - l, m);
      if (st.is_zero()) continue;
      for (int i = 0; i <= l; ++i) {
        const Rational cauchy = second_kind ? ws.cauchy_second(s, i) : ws.cauchy_first(s, i);
        const Rational value = second_kind ? ws.pc_hat_at(p.k, l - i, s) : ws.pc_at(p.k, l - i, s);
        coeff += binomial(n, l) * binomial(l, i) * a.pow(-(n - l + i)) * st * cauchy * value;
      }
    }
    if (!second_kind) coeff *= sign(m);
    rhs.add_scaled(ws.bernoulli_poly(s, m), coeff);
  }
  const Polynomial& lhs = second_kind ? ws.pc_hat(p.k, n) : ws.pc(p.k, n);
  return make_result(id, p, n, lhs, rhs);
}

// ---- T9, E77 ----------------------------------------------------------------

Polynomial t9_rhs(Workspace& ws, int n, const ParamPoint& p, bool printed) {
  const int s = *p.s;
  const Rational& lambda = *p.lambda;
  const Rational& a = p.a;
  const Rational one_minus = Rational(1) - lambda;
  Polynomial rhs;
  for (int m = 0; m <= n; ++m) {
    Rational coeff;
    for (int l = 0; l <= n - m; ++l) {
      const Rational st = s1(n - l, m);
      if (st.is_zero()) continue;
      for (int i = 0; i <= s && i <= l; ++i) {
        const Rational choose = printed ? binomial(l, i) : binomial(s, i);
        coeff += binomial(n, l) * choose * falling_poly(i)(l) * a.pow(-(n - l + i)) * one_minus.pow(s - i) *
                 (-lambda).pow(i) * st * ws.pc_at(p.k, l - i, s);
      }
    }
    rhs.add_scaled(ws.frobenius_euler(s, lambda, m), sign(m) * coeff);
  }
  return rhs * one_minus.pow(-s);
}

VerificationResult verify_t9(Workspace& ws, int n, const ParamPoint& p) {
  VerificationResult r = make_result(Id::T9, p, n, ws.pc(p.k, n), t9_rhs(ws, n, p, false));
  r.as_printed = t9_rhs(ws, n, p, true) == ws.pc(p.k, n);
  r.note = "checked with C(s,i); as_printed reports the C(l,i) form";
  return r;
}

VerificationResult verify_e77(Workspace& ws, int n, const ParamPoint& p) {
  const int s = *p.s;
  const Rational& lambda = *p.lambda;
  const Rational& a = p.a;
  Polynomial rhs;
  for (int m = 0; m <= n; ++m) {
    Rational coeff;
    for (int l = 0; l <= n - m; ++l) {
      const Rational st = s1(n - l, m);
      if (st.is_zero()) continue;
      for (int i = 0; i <= s; ++i)
        coeff += binomial(n, l) * binomial(s, i) * a.pow(-(n - l)) * (-lambda).pow(s - i) * st *
                 ws.pc_hat_at(p.k, l, i);
    }
    rhs.add_scaled(ws.frobenius_euler(s, lambda, m), coeff);
  }
  rhs *= (Rational(1) - lambda).pow(-s);
  return make_result(Id::E77, p, n, ws.pc_hat(p.k, n), rhs);
}

// ---- T10, T10H --------------------------------------------------------------

VerificationResult verify_t10(Workspace& ws, Id id, int n, const ParamPoint& p) {
  const bool second_kind = id == Id::T10H;
  Polynomial rhs;
  for (int m = 0; m <= n; ++m) {
    if (second_kind)
      rhs.add_scaled(falling_poly(m), binomial(n, m) * p.a.pow(-m) * ws.pc_hat_at(p.k, n - m, 0));
    else
      rhs.add_scaled(rising_poly(m), binomial(n, m) * (-p.a).pow(-m) * ws.pc_at(p.k, n - m, 0));
  }
  const Polynomial& lhs = second_kind ? ws.pc_hat(p.k, n) : ws.pc(p.k, n);
  return make_result(id, p, n, lhs, rhs);
}

void validate(IdentityId id, int n, const ParamPoint& p) {
  const IdentityInfo& entry = info(id);
  const std::string name(entry.name);
  if (p.a.is_zero()) throw UsageError(name + ": a must be nonzero");
  if (n < entry.min_n) throw UsageError(name + ": requires n >= " + std::to_string(entry.min_n));
  if (entry.uses_s != p.s.has_value())
    throw UsageError(name + (entry.uses_s ? ": parameter s is required" : ": parameter s does not apply"));
  if (entry.uses_lambda != p.lambda.has_value())
    throw UsageError(name + (entry.uses_lambda ? ": parameter lambda is required" : ": parameter lambda does not apply"));
  if (entry.uses_m != p.m.has_value())
    throw UsageError(name + (entry.uses_m ? ": parameter m is required" : ": parameter m does not apply"));
  if (p.s && *p.s < 0) throw UsageError(name + ": s must be nonnegative");
  if (p.lambda && *p.lambda == Rational(1)) throw UsageError(name + ": lambda must differ from 1");
  if (p.m && (*p.m < 1 || *p.m > n)) throw UsageError(name + ": requires 1 <= m <= n");
}

}  // namespace

namespace detail {

VerificationResult verify_in(Workspace& ws, IdentityId id, int n, const ParamPoint& p) {
  validate(id, n, p);
  if (p.k != ws.k() || p.a != ws.a()) throw UsageError("workspace does not match the parameter point");
  if (n > ws.n_max()) throw UsageError("workspace capacity exceeded");
  switch (id) {
    case Id::T1: return verify_t1(ws, n, p);
    case Id::P2: return verify_p2(ws, n, p);
    case Id::E30: return verify_e30(ws, n, p);
    case Id::E31: return verify_e31(ws, n, p);
    case Id::T3: return verify_t3(ws, n, p);
    case Id::T3H: return verify_t3h(ws, n, p);
    case Id::T4: return verify_t4(ws, n, p);
    case Id::E41: return verify_e41(ws, n, p);
    case Id::T5: return verify_t5(ws, n, p);
    case Id::E48: return verify_e48(ws, n, p);
    case Id::E49:
    case Id::E50: return verify_addition(ws, id, n, p);
    case Id::E51: return verify_e51(ws, n, p);
    case Id::E52: return verify_e52(ws, n, p);
    case Id::E54: return verify_e54(ws, n, p);
    case Id::E55: return verify_e55(ws, n, p);
    case Id::T6:
    case Id::E60:
    case Id::E61:
    case Id::E62: return verify_t6_family(ws, id, n, p);
    case Id::T7:
    case Id::E67: return verify_t7_family(ws, id, n, p);
    case Id::E68:
    case Id::E69: return verify_derivative(ws, id, n, p);
    case Id::T8:
    case Id::E74: return verify_bernoulli_basis(ws, id, n, p);
    case Id::T9: return verify_t9(ws, n, p);
    case Id::E77: return verify_e77(ws, n, p);
    case Id::T10:
    case Id::T10H: return verify_t10(ws, id, n, p);
  }
  throw UsageError("unknown identity");
}

}  // namespace detail

VerificationResult verify(IdentityId id, int n, const ParamPoint& params) {
  validate(id, n, params);
  detail::Workspace ws(params.k, params.a, n);
  return detail::verify_in(ws, id, n, params);
}

Polynomial pc_mixed_explicit(int n, int k, const Rational& a) {
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
  if (n < 0) throw DomainError("n must be nonnegative");
  return explicit_mixed(n, k, a, false, 1);
}

Polynomial pc_hat_mixed_explicit(int n, int k, const Rational& a) {
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
  if (n < 0) throw DomainError("n must be nonnegative");
  return explicit_mixed(n, k, a, true, 1);
}

std::vector<Rational> y_samples(int n) {
  const std::size_t count = static_cast<std::size_t>(std::max(5, n + 1));
  std::vector<Rational> out{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  // Continue with -2, 3, -1/2, 3/2, -3, 4, -3/2, 5/2, ...
  for (int step = 2; out.size() < count; ++step) {
    for (const Rational& y : {Rational(-step), Rational(step + 1), Rational(-(2 * step - 3), 2),
                              Rational(2 * step - 1, 2)}) {
      if (out.size() == count) break;
      out.push_back(y);
    }
  }
  out.resize(count);
  return out;
}

}  // namespace umbra
