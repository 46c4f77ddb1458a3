#include "umbra/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "umbra/errors.hpp"
#include "workspace.hpp"

namespace umbra {

Grid Grid::defaults() {
  Grid g;
  g.a = {Rational(1), Rational(2), Rational(-1), Rational(3, 7), Rational(-5, 2)};
  g.k = {-2, -1, 0, 1, 2, 3};
  g.s = {0, 1, 2, 3};
  g.lambda = {Rational(2), Rational(-1), Rational(1, 2), Rational(5, 3)};
  return g;
}

void Grid::validate() const {
  if (a.empty() || k.empty()) throw UsageError("grid: a and k lists must be nonempty");
  for (const auto& v : a)
    if (v.is_zero()) throw UsageError("grid: a must be nonzero");
  for (int v : s)
    if (v < 0) throw UsageError("grid: s must be nonnegative");
  for (const auto& v : lambda)
    if (v == Rational(1)) throw UsageError("grid: lambda must differ from 1");
}

namespace {

struct Task {
  Rational a;
  int k;
};

void run_task(const Task& task, std::span<const IdentityId> ids, int n_max, const Grid& grid,
              std::vector<VerificationResult>& out) {
  detail::Workspace ws(task.k, task.a, n_max);
  for (IdentityId id : ids) {
    const IdentityInfo& entry = info(id);
    std::vector<ParamPoint> points;
    ParamPoint base{task.a, task.k, std::nullopt, std::nullopt, std::nullopt};
    if (entry.uses_s) {
      for (int s : grid.s) {
        base.s = s;
        if (entry.uses_lambda) {
          for (const auto& lambda : grid.lambda) {
            base.lambda = lambda;
            points.push_back(base);
          }
        } else {
          points.push_back(base);
        }
      }
    } else {
      points.push_back(base);
    }
    for (const ParamPoint& point : points) {
      for (int n = entry.min_n; n <= n_max; ++n) {
        if (entry.uses_m) {
          for (int m = 1; m <= n; ++m) {
            ParamPoint with_m = point;
            with_m.m = m;
            out.push_back(detail::verify_in(ws, id, n, with_m));
          }
        } else {
          out.push_back(detail::verify_in(ws, id, n, point));
        }
      }
    }
  }
}

}  // namespace

std::vector<VerificationResult> verify_grid(std::span<const IdentityId> ids, int n_max, const Grid& grid,
                                            unsigned threads) {
  grid.validate();
  if (n_max < 0) throw UsageError("n_max must be nonnegative");

  std::vector<Task> tasks;
  for (const auto& a : grid.a)
    for (int k : grid.k) tasks.push_back({a, k});

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

  std::vector<std::vector<VerificationResult>> per_task(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        run_task(tasks[i], ids, n_max, grid, per_task[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationResult> results;
  for (auto& chunk : per_task) std::move(chunk.begin(), chunk.end(), std::back_inserter(results));
  std::sort(results.begin(), results.end(), [](const VerificationResult& l, const VerificationResult& r) {
    if (l.id != r.id) return l.id < r.id;
    if (auto c = l.params <=> r.params; c != 0) return c < 0;
    return l.n < r.n;
  });

  // Per identity, flag the failure with the smallest n (ties broken by params).
  for (std::size_t i = 0; i < results.size();) {
    std::size_t j = i;
    VerificationResult* best = nullptr;
    for (; j < results.size() && results[j].id == results[i].id; ++j) {
      auto& r = results[j];
      if (r.holds()) continue;
      if (!best || r.n < best->n || (r.n == best->n && r.params < best->params)) best = &r;
    }
    if (best) best->minimal_counterexample = true;
    i = j;
  }
  return results;
}

GridSummary summarize(std::span<const VerificationResult> results) {
  GridSummary s;
  s.checked = results.size();
  for (const auto& r : results) {
    if (!r.holds()) ++s.failed;
    if (r.as_printed && !*r.as_printed) ++s.printed_form_failures;
  }
  return s;
}

}  // namespace umbra
