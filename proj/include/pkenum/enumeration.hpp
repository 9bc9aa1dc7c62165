#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pkenum/combinatorics.hpp"
#include "pkenum/numeric.hpp"
#include "pkenum/walks.hpp"

namespace pkenum {

namespace detail {

// Inclusion-exclusion sums are accumulated as (positive, negative) and
// subtracted once; a negative end result would mean a formula bug.
inline Count settle_signed_sum(Count positive, Count negative, const char* who) {
  if (negative > positive)
    throw std::logic_error(std::string(who) + ": alternating sum went negative");
  return positive - negative;
}

}  // namespace detail

/// Secondary-structure counts for n = 0..n_max at minimum arc length lambda:
/// t(n) = t(n-1) + sum_{j=0}^{n-lambda-1} t(n-2-j) t(j), with t(n) = 1 for
/// n <= lambda.
inline std::vector<Count> secondary_structure_counts(int lambda, int n_max) {
  if (lambda < 1)
    throw std::invalid_argument("secondary_structure_counts: lambda < 1");
  if (n_max < 0)
    throw std::invalid_argument("secondary_structure_counts: n_max < 0");
  std::vector<Count> t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n <= lambda) {
      t[static_cast<std::size_t>(n)] = 1;
      continue;
    }
    Count acc = t[static_cast<std::size_t>(n - 1)];
    for (int j = 0; j <= n - lambda - 1; ++j)
      acc += t[static_cast<std::size_t>(n - 2 - j)] * t[static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return t;
}

inline Count secondary_structure_count(int lambda, long long n) {
  if (n < 0) throw std::invalid_argument("secondary_structure_count: n < 0");
  return secondary_structure_counts(lambda, static_cast<int>(n)).back();
}

/// Ways to select j1 1-arcs, j2 (i,i+2)-arcs-with-isolated-midpoint and j3
/// (i,i+3)-arcs-with-isolated-interior over [n]; 0 on infeasible input.
inline Count arc_selection_count(long long n, long long j1, long long j2,
                                 long long j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) return 0;
  const long long top = n - j1 - 2 * j2 - 3 * j3;
  const long long rest = n - 2 * j1 - 3 * j2 - 4 * j3;
  if (top < 0 || rest < 0) return 0;
  return multinomial(top, {j1, j2, j3, rest});
}

/**
 * Number of k-noncrossing diagrams on [n] with exactly h arcs, no 1-arc and
 * no beta-arc. Inclusion-exclusion over the selected short arcs; out-of-range
 * terms vanish through the zero extension of partial_matching_count.
 */
inline Count beta_free_count(int k, long long n, long long h) {
  if (k < 2) throw std::invalid_argument("beta_free_count: k < 2");
  if (h < 0) return 0;

  static std::mutex memo_mu;
  static std::map<std::tuple<int, long long, long long>, Count> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    if (auto it = memo.find({k, n, h}); it != memo.end()) return it->second;
  }

  Count positive = 0, negative = 0;
  for (long long j1 = 0; j1 <= h; ++j1) {
    for (long long j2 = 0; j1 + j2 <= h; ++j2) {
      for (long long j3 = 0; j1 + j2 + j3 <= h; ++j3) {
        const Count selections = arc_selection_count(n, j1, j2, j3);
        if (selections == 0) continue;
        const Count completions = partial_matching_count(
            k, n - 2 * j1 - 3 * j2 - 4 * j3, n - 2 * h - j2 - 2 * j3);
        if (completions == 0) continue;
        ((j1 + j2 + j3) % 2 == 0 ? positive : negative) += selections * completions;
      }
    }
  }
  Count out = detail::settle_signed_sum(std::move(positive), std::move(negative),
                                        "beta_free_count");
  std::lock_guard<std::mutex> lock(memo_mu);
  return memo.try_emplace({k, n, h}, std::move(out)).first->second;
}

/// Beta-free diagrams as above that are additionally cores (no parallel arc
/// pair), obtained from beta_free_count by Moebius inversion over stack
/// inflation. By convention the count is 1 at h = 0.
inline Count beta_free_core_count(int k, long long n, long long h) {
  if (k < 2) throw std::invalid_argument("beta_free_core_count: k < 2");
  if (h < 0) return 0;
  if (h == 0) return 1;

  static std::mutex memo_mu;
  static std::map<std::tuple<int, long long, long long>, Count> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    if (auto it = memo.find({k, n, h}); it != memo.end()) return it->second;
  }

  Count positive = 0, negative = 0;
  for (long long b = 0; b <= h - 1; ++b) {
    const Count term =
        binomial(h - 1, b) * beta_free_count(k, n - 2 * h + 2 * b + 2, b + 1);
    if (term == 0) continue;
    ((h - b - 1) % 2 == 0 ? positive : negative) += term;
  }
  Count out = detail::settle_signed_sum(std::move(positive), std::move(negative),
                                        "beta_free_core_count");
  std::lock_guard<std::mutex> lock(memo_mu);
  return memo.try_emplace({k, n, h}, std::move(out)).first->second;
}

/// Number of sequences (a_1..a_parts) of integers >= sigma-1 summing to b.
inline Count composition_count(long long b, long long parts, int sigma) {
  if (parts < 1) throw std::invalid_argument("composition_count: parts < 1");
  if (sigma < 1) throw std::invalid_argument("composition_count: sigma < 1");
  if (b < 0) return 0;
  return binomial(b + (2 - sigma) * parts - 1, parts - 1);
}

/**
 * Number of <k,4,sigma>-structures on [n] with exactly h arcs (sigma >= 3):
 * each structure is a beta-free core inflated stack-wise, so the count is a
 * sum over the number b of extra arcs spent on inflation.
 */
inline Count canonical_count(int k, int sigma, long long n, long long h) {
  if (k < 2) throw std::invalid_argument("canonical_count: k < 2");
  if (sigma < 3) throw std::invalid_argument("canonical_count: sigma < 3");
  if (h < 0) return 0;
  if (h == 0) return 1;
  Count total = 0;
  for (long long b = sigma - 1; b <= h - 1; ++b) {
    const Count ways = composition_count(b, h - b, sigma);
    if (ways == 0) continue;
    total += ways * beta_free_core_count(k, n - 2 * b, h - b);
  }
  return total;
}

/// Total number of <k,4,sigma>-structures on [n].
inline Count canonical_total(int k, int sigma, long long n) {
  if (n < 0) return 0;
  Count total = 0;
  for (long long h = 0; 2 * h <= n; ++h) total += canonical_count(k, sigma, n, h);
  return total;
}

/// Number of <k,2,1>-structures (k-noncrossing, no 1-arc) on [n], by sieving
/// the 1-arcs out of the partial matchings.
inline Count rna_structure_count(int k, long long n) {
  if (k < 2) throw std::invalid_argument("rna_structure_count: k < 2");
  if (n < 0) return 0;
  Count positive = 0, negative = 0;
  for (long long b = 0; 2 * b <= n; ++b) {
    const Count term = binomial(n - b, b) * total_matching_count(k, n - 2 * b);
    if (term == 0) continue;
    (b % 2 == 0 ? positive : negative) += term;
  }
  return detail::settle_signed_sum(std::move(positive), std::move(negative),
                                   "rna_structure_count");
}

// ---------------------------------------------------------------------------
// Count tables

enum class table_kind { secondary, rna_arc2, beta_free, beta_free_core, canonical };

/// A computed table of counts with its parameters and provenance. `totals`
/// maps n to the total count; `per_arcs` (optional) maps (n,h).
struct count_table {
  table_kind kind{};
  int k = 0;
  int lambda = 0;
  int sigma = 0;
  std::string provenance;
  std::map<long long, Count> totals;
  std::map<std::pair<long long, long long>, Count> per_arcs;
};

inline count_table canonical_table(int k, int sigma, int n_max,
                                   bool with_per_arcs = false) {
  count_table t;
  t.kind = table_kind::canonical;
  t.k = k;
  t.lambda = 4;
  t.sigma = sigma;
  t.provenance = "canonical_count(k=" + std::to_string(k) +
                 ",sigma=" + std::to_string(sigma) + ")";
  for (long long n = 0; n <= n_max; ++n) {
    Count total = 0;
    for (long long h = 0; 2 * h <= n; ++h) {
      Count c = canonical_count(k, sigma, n, h);
      if (with_per_arcs) t.per_arcs[{n, h}] = c;
      total += c;
    }
    t.totals[n] = std::move(total);
  }
  return t;
}

inline count_table rna_structure_table(int k, int n_max) {
  count_table t;
  t.kind = table_kind::rna_arc2;
  t.k = k;
  t.lambda = 2;
  t.sigma = 1;
  t.provenance = "rna_structure_count(k=" + std::to_string(k) + ")";
  for (long long n = 0; n <= n_max; ++n) t.totals[n] = rna_structure_count(k, n);
  return t;
}

inline count_table secondary_table(int lambda, int n_max) {
  count_table t;
  t.kind = table_kind::secondary;
  t.k = 2;
  t.lambda = lambda;
  t.sigma = 1;
  t.provenance = "secondary_structure_count(lambda=" + std::to_string(lambda) + ")";
  auto row = secondary_structure_counts(lambda, n_max);
  for (long long n = 0; n <= n_max; ++n)
    t.totals[n] = row[static_cast<std::size_t>(n)];
  return t;
}

}  // namespace pkenum
