#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pkenum/combinatorics.hpp"
#include "pkenum/numeric.hpp"

namespace pkenum {

/**
 * Counts k-noncrossing matchings through their lattice-walk model: walks in
 * Z^{k-1} with steps +-e_i, confined to the chamber
 * x1 >= x2 >= ... >= x_{k-1} >= 0, starting and ending at the origin.
 * The number of such walks of length 2m equals the number of k-noncrossing
 * perfect matchings on [2m]; partial matchings reduce to perfect ones by
 * choosing the isolated vertices.
 *
 * Each instance memoizes the perfect-matching counts for its k. A cache
 * capacity may be given; values beyond it are recomputed per query.
 * All queries are serialized internally, so concurrent use is safe.
 */
class walk_counter {
 public:
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  explicit walk_counter(int crossing_bound, std::size_t cache_capacity = unlimited)
      : k_(crossing_bound), capacity_(cache_capacity) {
    if (k_ < 2) throw std::invalid_argument("walk_counter: k must be >= 2");
    cache_.push_back(1);  // the empty matching
  }

  int crossing_bound() const { return k_; }

  /// Number of k-noncrossing perfect matchings on [2m].
  Count perfect(int m) {
    if (m < 0) return 0;
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<std::size_t>(m) < cache_.size()) return cache_[static_cast<std::size_t>(m)];
    return run_walk_dp(m);
  }

  /// Number of k-noncrossing partial matchings on [n] with the given number
  /// of isolated vertices. Total by convention: 0 on negative arguments,
  /// isolated > n, or parity mismatch. The counting formulas rely on this
  /// zero extension for their out-of-range terms.
  Count partial(long long n, long long isolated) {
    if (n < 0 || isolated < 0 || isolated > n || (n - isolated) % 2 != 0) return 0;
    Count ways = binomial(n, isolated);
    if (ways == 0) return 0;
    return ways * perfect(static_cast<int>((n - isolated) / 2));
  }

  /// Number of all k-noncrossing partial matchings on [n].
  Count total(long long n) {
    if (n < 0) return 0;
    Count sum = 0;
    for (long long iso = n % 2; iso <= n; iso += 2) sum += partial(n, iso);
    return sum;
  }

 private:
  // Forward DP over the 2m steps. A state is pruned once its coordinate sum
  // exceeds the remaining steps (it could no longer come back to the origin);
  // no walk that returns to the origin at any step t <= 2m is affected, so
  // the origin count after an even number of steps 2j is exactly the number
  // of closed chamber walks of length 2j. One run therefore fills the cache
  // for every j <= m.
  Count run_walk_dp(int m) {
    const int dim = k_ - 1;
    const int steps = 2 * m;
    std::map<std::vector<int>, Count> frontier;
    frontier[std::vector<int>(static_cast<std::size_t>(dim), 0)] = 1;

    std::vector<Count> closed(static_cast<std::size_t>(m) + 1);
    closed[0] = 1;
    for (int t = 1; t <= steps; ++t) {
      const int remaining = steps - t;
      std::map<std::vector<int>, Count> next;
      for (const auto& [state, ways] : frontier) {
        const int sum = std::accumulate(state.begin(), state.end(), 0);
        for (int i = 0; i < dim; ++i) {
          for (int delta : {1, -1}) {
            const std::size_t ui = static_cast<std::size_t>(i);
            const int moved = state[ui] + delta;
            if (moved < 0) continue;
            if (i > 0 && moved > state[ui - 1]) continue;
            if (i + 1 < dim && moved < state[ui + 1]) continue;
            if (sum + delta > remaining) continue;
            std::vector<int> to(state);
            to[ui] = moved;
            assert(std::is_sorted(to.rbegin(), to.rend()) && to.back() >= 0);
            next[std::move(to)] += ways;
          }
        }
      }
      frontier = std::move(next);
      if (t % 2 == 0) {
        auto it = frontier.find(std::vector<int>(static_cast<std::size_t>(dim), 0));
        closed[static_cast<std::size_t>(t / 2)] = (it == frontier.end()) ? Count(0) : it->second;
      }
    }

    for (std::size_t j = cache_.size(); j <= static_cast<std::size_t>(m); ++j) {
      if (cache_.size() >= capacity_) break;
      cache_.push_back(closed[j]);
    }
    return closed[static_cast<std::size_t>(m)];
  }

  int k_;
  std::size_t capacity_;
  std::mutex mu_;
  std::vector<Count> cache_;  // cache_[j] = closed walks of length 2j
};

namespace detail {

inline walk_counter& shared_walk_counter(int k) {
  static std::mutex registry_mu;
  static std::map<int, std::unique_ptr<walk_counter>> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& slot = registry[k];
  if (!slot) slot = std::make_unique<walk_counter>(k);
  return *slot;
}

}  // namespace detail

/// Number of k-noncrossing perfect matchings on [2m] (process-wide cache).
inline Count perfect_matching_count(int k, int m) {
  return detail::shared_walk_counter(k).perfect(m);
}

/// Number of k-noncrossing partial matchings on [n] with `isolated` isolated
/// vertices; 0 on any out-of-range or parity-violating input.
inline Count partial_matching_count(int k, long long n, long long isolated) {
  return detail::shared_walk_counter(k).partial(n, isolated);
}

/// Number of all k-noncrossing partial matchings on [n].
inline Count total_matching_count(int k, long long n) {
  return detail::shared_walk_counter(k).total(n);
}

}  // namespace pkenum
