#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pkenum {

/// An arc (lo, hi) with 1 <= lo < hi, drawn in the upper half-plane.
struct arc {
  int lo = 0;
  int hi = 0;
  friend constexpr bool operator==(const arc&, const arc&) = default;
  friend constexpr auto operator<=>(const arc&, const arc&) = default;
};

/// Sentinel value of min_arc_length / min_stack_length for arcless diagrams:
/// the minimum over an empty set is +infinity, so an arcless diagram passes
/// every lower-bound test.
inline constexpr int unbounded_length = std::numeric_limits<int>::max();

/// Returns true iff the two arcs cross: lo < p.lo < hi < p.hi or vice versa.
constexpr bool arcs_cross(arc a, arc b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

/**
 * A partial-matching diagram: vertices 1..n on a horizontal line, arcs in the
 * upper half-plane, every vertex on at most one arc.
 *
 * Arcs are kept sorted lexicographically and duplicate-free; construction
 * validates vertex bounds and the degree-<=1 condition.
 */
class diagram {
 public:
  diagram() = default;

  explicit diagram(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("diagram: negative vertex count");
  }

  diagram(int n, std::vector<arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("diagram: negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const arc& a : arcs_) {
      if (a.lo < 1 || a.hi > n_ || a.lo >= a.hi)
        throw std::invalid_argument("diagram: arc (" + std::to_string(a.lo) +
                                    "," + std::to_string(a.hi) +
                                    ") out of range");
      if (seen[static_cast<std::size_t>(a.lo)] ||
          seen[static_cast<std::size_t>(a.hi)])
        throw std::invalid_argument("diagram: vertex degree exceeds 1");
      seen[static_cast<std::size_t>(a.lo)] = 1;
      seen[static_cast<std::size_t>(a.hi)] = 1;
    }
  }

  int vertices() const { return n_; }
  const std::vector<arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }

  bool has_arc(arc a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
  }

  /// Partner of vertex v, or 0 if v is isolated.
  int partner(int v) const {
    for (const arc& a : arcs_) {
      if (a.lo == v) return a.hi;
      if (a.hi == v) return a.lo;
    }
    return 0;
  }

  bool is_isolated(int v) const { return partner(v) == 0; }

  friend bool operator==(const diagram&, const diagram&) = default;

 private:
  int n_ = 0;
  std::vector<arc> arcs_;  // sorted, validated
};

/// Structure class <k, lambda, sigma>: crossing number < k, every arc of
/// length >= lambda, every maximal stack of length >= sigma.
struct structure_class {
  int k;
  int lambda;
  int sigma;

  structure_class(int k_, int lambda_, int sigma_)
      : k(k_), lambda(lambda_), sigma(sigma_) {
    if (k < 2) throw std::invalid_argument("structure_class: k must be >= 2");
    if (lambda < 1)
      throw std::invalid_argument("structure_class: lambda must be >= 1");
    if (sigma < 1)
      throw std::invalid_argument("structure_class: sigma must be >= 1");
  }
};

/// A maximal run of parallel arcs ((i,j),(i+1,j-1),...,(i+len-1,j-len+1)).
struct stack_run {
  arc outermost;
  int length = 0;
  friend constexpr bool operator==(const stack_run&, const stack_run&) = default;
};

/**
 * Size of the largest set of pairwise-crossing arcs (0 for arcless input).
 * Branch-and-bound maximum clique on the crossing graph; exponential in the
 * worst case, intended for diagrams at oracle scale (a few dozen arcs).
 */
inline int max_crossing(std::span<const arc> arcs) {
  const int h = static_cast<int>(arcs.size());
  if (h == 0) return 0;
  if (h > 64)
    throw std::invalid_argument("max_crossing: more than 64 arcs unsupported");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(h), 0);
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (arcs_cross(arcs[static_cast<std::size_t>(i)],
                     arcs[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }

  int best = 1;
  auto expand = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand != 0) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cand & adj[static_cast<std::size_t>(v)], size + 1);
    }
  };
  expand(expand, h == 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << h) - 1, 0);
  return best;
}

inline int max_crossing(const diagram& d) {
  return max_crossing(std::span<const arc>(d.arcs()));
}

/// Minimum arc length hi - lo; unbounded_length for arcless input.
inline int min_arc_length(std::span<const arc> arcs) {
  int best = unbounded_length;
  for (const arc& a : arcs) best = std::min(best, a.hi - a.lo);
  return best;
}

inline int min_arc_length(const diagram& d) {
  return min_arc_length(std::span<const arc>(d.arcs()));
}

/// Partition of the arcs into maximal parallel runs, ordered by outermost arc.
/// Input must be sorted (diagram arcs always are).
inline std::vector<stack_run> stack_decomposition(std::span<const arc> arcs) {
  auto contains = [&](arc a) {
    return std::binary_search(arcs.begin(), arcs.end(), a);
  };
  std::vector<stack_run> runs;
  for (const arc& a : arcs) {
    if (contains(arc{a.lo - 1, a.hi + 1})) continue;  // not the outermost
    int len = 1;
    while (contains(arc{a.lo + len, a.hi - len})) ++len;
    runs.push_back(stack_run{a, len});
  }
  return runs;
}

inline std::vector<stack_run> stack_decomposition(const diagram& d) {
  return stack_decomposition(std::span<const arc>(d.arcs()));
}

/// Minimum maximal-stack length; unbounded_length for arcless input.
inline int min_stack_length(std::span<const arc> arcs) {
  int best = unbounded_length;
  for (const stack_run& r : stack_decomposition(arcs))
    best = std::min(best, r.length);
  return best;
}

inline int min_stack_length(const diagram& d) {
  return min_stack_length(std::span<const arc>(d.arcs()));
}

/// True iff the diagram contains an arc (i,i+2) with i+1 isolated, or an arc
/// (i,i+3) with i+1 and i+2 isolated. An arc (i,i+2) whose midpoint is paired
/// does not qualify.
inline bool has_beta_arc(std::span<const arc> arcs) {
  std::vector<int> endpoints;
  endpoints.reserve(arcs.size() * 2);
  for (const arc& a : arcs) {
    endpoints.push_back(a.lo);
    endpoints.push_back(a.hi);
  }
  std::sort(endpoints.begin(), endpoints.end());
  auto isolated = [&](int v) {
    return !std::binary_search(endpoints.begin(), endpoints.end(), v);
  };
  for (const arc& a : arcs) {
    if (a.hi == a.lo + 2 && isolated(a.lo + 1)) return true;
    if (a.hi == a.lo + 3 && isolated(a.lo + 1) && isolated(a.lo + 2))
      return true;
  }
  return false;
}

inline bool has_beta_arc(const diagram& d) {
  return has_beta_arc(std::span<const arc>(d.arcs()));
}

/// True iff no two arcs are parallel neighbours (i,j),(i+1,j-1), i.e. every
/// maximal stack has length 1.
inline bool is_core(std::span<const arc> arcs) {
  auto contains = [&](arc a) {
    return std::binary_search(arcs.begin(), arcs.end(), a);
  };
  for (const arc& a : arcs)
    if (contains(arc{a.lo + 1, a.hi - 1})) return false;
  return true;
}

inline bool is_core(const diagram& d) {
  return is_core(std::span<const arc>(d.arcs()));
}

/// Membership in <k, lambda, sigma>. Arcless diagrams belong to every class.
inline bool is_member(const diagram& d, const structure_class& c) {
  if (d.empty()) return true;
  return max_crossing(d) <= c.k - 1 && min_arc_length(d) >= c.lambda &&
         min_stack_length(d) >= c.sigma;
}

/**
 * Core map: contract every maximal stack to its innermost arc, keep isolated
 * vertices, drop the remaining endpoints and relabel 1..n' preserving order.
 * The image has no parallel arc pair, so the map is idempotent.
 */
inline diagram core_map(const diagram& d) {
  std::vector<char> keep(static_cast<std::size_t>(d.vertices()) + 1, 1);
  std::vector<arc> inner;
  for (const stack_run& r : stack_decomposition(d)) {
    // survivors of a run are the endpoints of its innermost arc
    for (int off = 0; off < r.length - 1; ++off) {
      keep[static_cast<std::size_t>(r.outermost.lo + off)] = 0;
      keep[static_cast<std::size_t>(r.outermost.hi - off)] = 0;
    }
    inner.push_back(
        arc{r.outermost.lo + r.length - 1, r.outermost.hi - r.length + 1});
  }
  std::vector<int> relabel(static_cast<std::size_t>(d.vertices()) + 1, 0);
  int next = 0;
  for (int v = 1; v <= d.vertices(); ++v)
    if (keep[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = ++next;
  std::vector<arc> mapped;
  mapped.reserve(inner.size());
  for (const arc& a : inner)
    mapped.push_back(arc{relabel[static_cast<std::size_t>(a.lo)],
                         relabel[static_cast<std::size_t>(a.hi)]});
  return diagram(next, std::move(mapped));
}

/// Mirror image: relabel i -> n+1-i. Crossing number is invariant under this.
inline diagram reversed(const diagram& d) {
  std::vector<arc> out;
  out.reserve(d.arcs().size());
  const int n = d.vertices();
  for (const arc& a : d.arcs()) out.push_back(arc{n + 1 - a.hi, n + 1 - a.lo});
  return diagram(n, std::move(out));
}

}  // namespace pkenum
