#pragma once

#include <initializer_list>
#include <map>
#include <mutex>
#include <utility>

#include "pkenum/numeric.hpp"

namespace pkenum {

/// Binomial coefficient with the extended convention
/// C(n, r) = 0 whenever n < 0, r < 0 or r > n.
/// The alternating sums in the counting pipeline rely on this being total.
inline Count binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Count out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact at every step
  }
  return out;
}

/// Multinomial (top choose p0, p1, ..., p_m) with sum(p) == top required;
/// 0 when any argument is negative or the parts do not sum to top.
inline Count multinomial(long long top, std::initializer_list<long long> parts) {
  if (top < 0) return 0;
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != top) return 0;
  Count out = 1;
  long long rest = top;
  for (long long p : parts) {
    out *= binomial(rest, p);
    rest -= p;
  }
  return out;
}

}  // namespace pkenum
