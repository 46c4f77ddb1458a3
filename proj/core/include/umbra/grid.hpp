#pragma once

#include <span>
#include <vector>

#include "umbra/identities.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Declarative parameter grid. m is not listed: identities that take m
/// range over 1..n at each n.
struct Grid {
  std::vector<Rational> a;
  std::vector<int> k;
  std::vector<int> s;
  std::vector<Rational> lambda;

  /// a in {1, 2, -1, 3/7, -5/2}, k in {-2..3}, s in {0..3},
  /// lambda in {2, -1, 1/2, 5/3}.
  static Grid defaults();
  /// Throws UsageError when a point violates a domain (a = 0, lambda = 1,
  /// s < 0) or a list is empty.
  void validate() const;
};

/// Every grid point of every listed identity for n in [min_n, n_max].
/// Results are ordered by (id, params, n) independent of thread count;
/// threads = 0 uses the hardware concurrency.
std::vector<VerificationResult> verify_grid(std::span<const IdentityId> ids, int n_max, const Grid& grid,
                                            unsigned threads = 0);

struct GridSummary {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t printed_form_failures = 0;
};

GridSummary summarize(std::span<const VerificationResult> results);

}  // namespace umbra
