#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pkenum/diagram.hpp"
#include "pkenum/numeric.hpp"

namespace pkenum::oracle {

/// Partial matchings grow super-exponentially (46M diagrams at n=16 already);
/// refuse anything larger unless the caller raises the limit explicitly.
inline constexpr int default_vertex_limit = 16;

class vertex_limit_error : public std::runtime_error {
 public:
  vertex_limit_error(int n, int limit)
      : std::runtime_error("brute-force enumeration refused: n=" +
                           std::to_string(n) + " exceeds the limit " +
                           std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

namespace detail {

template <class Visitor>
void matchings_rec(int v, int n, std::vector<char>& taken,
                   std::vector<arc>& acc, Visitor& visit) {
  while (v <= n && taken[static_cast<std::size_t>(v)]) ++v;
  if (v > n) {
    visit(const_cast<const std::vector<arc>&>(acc));
    return;
  }
  // leave v isolated
  matchings_rec(v + 1, n, taken, acc, visit);
  // pair v with each larger free vertex, ascending
  for (int w = v + 1; w <= n; ++w) {
    if (taken[static_cast<std::size_t>(w)]) continue;
    taken[static_cast<std::size_t>(w)] = 1;
    acc.push_back(arc{v, w});
    matchings_rec(v + 1, n, taken, acc, visit);
    acc.pop_back();
    taken[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace detail

/**
 * Visit every partial matching on [n], passing the (lexicographically sorted)
 * arc list to the visitor. Deterministic order: at the smallest undecided
 * vertex, the isolated branch comes first, then partners in ascending order.
 */
template <class Visitor>
void for_each_matching(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_matching: n < 0");
  std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
  std::vector<arc> acc;
  acc.reserve(static_cast<std::size_t>(n) / 2);
  detail::matchings_rec(1, n, taken, acc, visit);
}

inline void check_limit(int n, int vertex_limit) {
  if (n > vertex_limit) throw vertex_limit_error(n, vertex_limit);
}

/// All members of <k,lambda,sigma> on [n], in enumeration order.
inline std::vector<diagram> enumerate_class(
    int n, const structure_class& c, int vertex_limit = default_vertex_limit) {
  check_limit(n, vertex_limit);
  std::vector<diagram> out;
  for_each_matching(n, [&](const std::vector<arc>& arcs) {
    std::span<const arc> sp(arcs);
    if (arcs.empty() || (max_crossing(sp) <= c.k - 1 &&
                         min_arc_length(sp) >= c.lambda &&
                         min_stack_length(sp) >= c.sigma))
      out.emplace_back(n, arcs);
  });
  return out;
}

inline Count count_class(int n, const structure_class& c,
                         int vertex_limit = default_vertex_limit) {
  check_limit(n, vertex_limit);
  Count total = 0;
  for_each_matching(n, [&](const std::vector<arc>& arcs) {
    std::span<const arc> sp(arcs);
    if (arcs.empty() || (max_crossing(sp) <= c.k - 1 &&
                         min_arc_length(sp) >= c.lambda &&
                         min_stack_length(sp) >= c.sigma))
      ++total;
  });
  return total;
}

/// Member counts of <k,lambda,sigma> on [n], bucketed by arc count.
inline std::map<int, Count> count_class_by_arcs(
    int n, const structure_class& c, int vertex_limit = default_vertex_limit) {
  check_limit(n, vertex_limit);
  std::map<int, Count> buckets;
  for_each_matching(n, [&](const std::vector<arc>& arcs) {
    std::span<const arc> sp(arcs);
    if (arcs.empty() || (max_crossing(sp) <= c.k - 1 &&
                         min_arc_length(sp) >= c.lambda &&
                         min_stack_length(sp) >= c.sigma))
      ++buckets[static_cast<int>(arcs.size())];
  });
  return buckets;
}

/// Diagrams on [n] with exactly h arcs, crossing number <= k-1, no 1-arc and
/// no beta-arc.
inline Count count_beta_free(int n, int h, int k,
                             int vertex_limit = default_vertex_limit) {
  check_limit(n, vertex_limit);
  Count total = 0;
  for_each_matching(n, [&](const std::vector<arc>& arcs) {
    if (static_cast<int>(arcs.size()) != h) return;
    std::span<const arc> sp(arcs);
    if (min_arc_length(sp) < 2) return;
    if (has_beta_arc(sp)) return;
    if (max_crossing(sp) > k - 1) return;
    ++total;
  });
  return total;
}

/// As count_beta_free, additionally requiring a core (no parallel arc pair).
inline Count count_beta_free_cores(int n, int h, int k,
                                   int vertex_limit = default_vertex_limit) {
  check_limit(n, vertex_limit);
  Count total = 0;
  for_each_matching(n, [&](const std::vector<arc>& arcs) {
    if (static_cast<int>(arcs.size()) != h) return;
    std::span<const arc> sp(arcs);
    if (min_arc_length(sp) < 2) return;
    if (has_beta_arc(sp)) return;
    if (!is_core(sp)) return;
    if (max_crossing(sp) > k - 1) return;
    ++total;
  });
  return total;
}

/// k-noncrossing perfect matchings on [2m].
inline Count count_perfect_matchings(int m, int k,
                                     int vertex_limit = default_vertex_limit) {
  check_limit(2 * m, vertex_limit);
  Count total = 0;
  for_each_matching(2 * m, [&](const std::vector<arc>& arcs) {
    if (static_cast<int>(arcs.size()) != m) return;
    if (max_crossing(std::span<const arc>(arcs)) > k - 1) return;
    ++total;
  });
  return total;
}

}  // namespace pkenum::oracle
