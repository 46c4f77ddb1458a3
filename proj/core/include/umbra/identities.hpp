#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Closed catalogue of verifiable identities for the mixed-type families.
/// Enumerator order is the canonical report order.
enum class IdentityId {
  T1, P2, E30, E31, T3, T3H, T4, E41, T5, E48, E49, E50, E51, E52,
  E54, E55, T6, E60, E61, E62, T7, E67, E68, E69, T8, E74, T9, E77, T10, T10H,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  /// Where the statement comes from (theorem or equation label).
  std::string_view location;
  std::string_view statement;
  std::string_view domain;
  std::string_view strategy;
  /// Audit identities are checked as printed and in a derivation form; the
  /// printed form is reported, not enforced.
  bool audit = false;
  int min_n = 0;
  bool uses_s = false;
  bool uses_lambda = false;
  bool uses_m = false;
};

std::span<const IdentityInfo> catalogue();
const IdentityInfo& info(IdentityId id);
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

std::vector<IdentityId> core_identities();
std::vector<IdentityId> audit_identities();
std::vector<IdentityId> all_identities();
/// "core", "audit", "all", or a comma-separated list of names.
/// Throws UsageError on unknown names.
std::vector<IdentityId> resolve_identities(std::string_view selector);

/// One point of the parameter grid. Every identity uses a and k; s, lambda
/// and m only where the identity has them.
struct ParamPoint {
  Rational a = 1;
  int k = 0;
  std::optional<int> s;
  std::optional<Rational> lambda;
  std::optional<int> m;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
  friend std::strong_ordering operator<=>(const ParamPoint& lhs, const ParamPoint& rhs);
};

std::string to_string(const ParamPoint& params);

struct VerificationResult {
  IdentityId id{};
  ParamPoint params;
  int n = 0;
  /// The checked sides agree exactly. For audit identities this is the
  /// status of the printed statement.
  bool equal = false;
  /// Audit identities (and core identities checked in an amended form):
  /// status of the statement exactly as printed.
  std::optional<bool> as_printed;
  /// Audit identities: status of the form obtained by re-assembling the
  /// derivation steps.
  std::optional<bool> derivation_form;
  /// Populated when equal is false.
  std::optional<Polynomial> lhs;
  std::optional<Polynomial> rhs;
  std::string note;
  /// Smallest failing (n, params) for this identity within a grid run.
  bool minimal_counterexample = false;

  /// Core: equal. Audit: equal in at least one of its forms.
  [[nodiscard]] bool holds() const;
};

/// Checks one identity at one (n, params). Left sides come from generating
/// function extraction; right sides from the stated finite sums over
/// Stirling, Cauchy and Bernoulli tables and evaluations of other family
/// members. Domain violations throw UsageError.
VerificationResult verify(IdentityId id, int n, const ParamPoint& params);

/// Explicit coefficient formulas for the mixed families, a route that uses
/// only Stirling numbers and powers of a.
Polynomial pc_mixed_explicit(int n, int k, const Rational& a);
Polynomial pc_hat_mixed_explicit(int n, int k, const Rational& a);

/// Fixed enumeration of y sample points for two-variable identities:
/// 0, 1, -1, 2, 1/2, -2, 3, -1/2, 3/2, -3, ... The first max(5, n+1) are
/// used at index n, which decides a degree-n identity in y exactly.
std::vector<Rational> y_samples(int n);

}  // namespace umbra
