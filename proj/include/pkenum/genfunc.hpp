#pragma once

#include <stdexcept>
#include <string>

#include "pkenum/enumeration.hpp"
#include "pkenum/numeric.hpp"
#include "pkenum/series.hpp"
#include "pkenum/walks.hpp"

namespace pkenum {

/**
 * Generating function of secondary structures with minimum arc length lambda,
 * expanded from the closed form
 *
 *   T(z) = (q(z) - sqrt(q(z)^2 - 4 z^2 (1-z)^2)) / (2 z^2 (1-z)),
 *   q(z) = 1 - 2z + 2z^2 - z^{lambda+1},
 *
 * choosing the square-root branch with constant term 1 so that T(0) = 1.
 */
inline series secondary_gf(int lambda, int order) {
  if (lambda < 1) throw std::invalid_argument("secondary_gf: lambda < 1");
  if (order < 1) throw std::invalid_argument("secondary_gf: order < 1");
  const int work = order + 2;  // headroom for the z^2 shift
  series q = series::one(work) - series::monomial(2, 1, work) +
             series::monomial(2, 2, work) - series::monomial(1, lambda + 1, work);
  const series one_minus_z = series::one(work) - series::monomial(1, 1, work);
  const series discriminant =
      q * q - series::monomial(4, 2, work) * (one_minus_z * one_minus_z);
  const series root = discriminant.sqrt_unit();
  series numerator = q - root;
  series t = numerator.shifted_down(2) /
             (Rational(2) * (series::one(order) - series::monomial(1, 1, order)));
  return t.truncated(order);
}

/// Same function obtained by iterating T <- (1 + z^2 T^2) / p(z) with
/// p(z) = 1 - z + z^2 + ... + z^lambda; each pass is exact two orders deeper.
inline series secondary_gf_by_equation(int lambda, int order) {
  if (lambda < 1) throw std::invalid_argument("secondary_gf_by_equation: lambda < 1");
  if (order < 1) throw std::invalid_argument("secondary_gf_by_equation: order < 1");
  series p = series::one(order);
  if (order >= 1) p.set(1, -1);
  for (int i = 2; i <= std::min(lambda, order); ++i) p.set(i, 1);
  const series x2 = series::monomial(1, 2, order);
  series t = series::one(order);
  for (int pass = 0; pass <= order / 2 + 1; ++pass)
    t = (series::one(order) + x2 * (t * t)) / p;
  return t;
}

/// Stack-substitution kernels for minimum stack length sigma:
/// w(x) = x^{2 sigma - 2} / (1 - x^2 + x^{2 sigma}) and
/// v(x) = 1 - x + w(x) (x^2 + x^3 + x^4).
struct stack_kernels_t {
  series w;
  series v;
};

inline stack_kernels_t stack_kernels(int sigma, int order) {
  if (sigma < 3) throw std::invalid_argument("stack_kernels: sigma < 3");
  series den = series::one(order) - series::monomial(1, 2, order) +
               series::monomial(1, 2 * sigma, order);
  series w = series::monomial(1, 2 * sigma - 2, order) / den;
  series tail = series::monomial(1, 2, order) + series::monomial(1, 3, order) +
                series::monomial(1, 4, order);
  series v = series::one(order) - series::monomial(1, 1, order) + w * tail;
  return {std::move(w), std::move(v)};
}

namespace detail {

// sum_{n>=0} f_k(2n,0) * ratio^n * prefactor, truncated; terminates because
// ratio has positive valuation.
inline series matching_gf_composition(int k, const series& ratio,
                                      const series& prefactor) {
  if (ratio.valuation() < 1)
    throw std::domain_error("matching_gf_composition: ratio must vanish at 0");
  const int order = std::min(ratio.order(), prefactor.order());
  series power = series::one(order);
  series sum(order);
  for (int n = 0; !power.is_zero(); ++n) {
    sum += Rational(perfect_matching_count(k, n)) * power;
    power *= ratio;
  }
  return prefactor * sum;
}

}  // namespace detail

/**
 * Generating function of <k,4,sigma>-structures (arc length >= 4, stacks of
 * length >= sigma >= 3):
 *
 *   T(x) = (1/v(x)) * sum_{n>=0} f_k(2n,0) * (w(x) x^2 / v(x)^2)^n .
 *
 * (sqrt(w) x / v)^{2n} = w^n x^{2n} / v^{2n}, so no square root is needed;
 * the summand's valuation is 2 sigma n and the sum truncates on its own.
 */
inline series canonical_gf(int k, int sigma, int order) {
  if (k < 2) throw std::invalid_argument("canonical_gf: k < 2");
  auto [w, v] = stack_kernels(sigma, order);
  const series vinv = v.inverse();
  const series ratio = w * series::monomial(1, 2, order) * (vinv * vinv);
  return detail::matching_gf_composition(k, ratio, vinv);
}

/// Generating function of <k,2,sigma>-structures (arc length >= 2), same
/// composition with u(x) = x^{2 sigma - 2} / (x^{2 sigma} - x^2 + 1) and
/// denominator u x^2 - x + 1.
inline series arc2_structure_gf(int k, int sigma, int order) {
  if (k < 2) throw std::invalid_argument("arc2_structure_gf: k < 2");
  if (sigma < 1) throw std::invalid_argument("arc2_structure_gf: sigma < 1");
  series den = series::monomial(1, 2 * sigma, order) -
               series::monomial(1, 2, order) + series::one(order);
  series u = series::monomial(1, 2 * sigma - 2, order) / den;
  series d = u * series::monomial(1, 2, order) - series::monomial(1, 1, order) +
             series::one(order);
  const series dinv = d.inverse();
  const series ratio = u * series::monomial(1, 2, order) * (dinv * dinv);
  return detail::matching_gf_composition(k, ratio, dinv);
}

/**
 * Verifies the stack-inflation identities as truncated series equalities:
 * substituting u -> w(x) into sum_{n,h} B*(n,h) u^h x^n over the beta-free
 * counts, and u -> x^{2(sigma-1)}/(1-x^2) over the beta-free core counts,
 * must both reproduce the <k,4,sigma> generating function. Returns true iff
 * all coefficients match up to the given order.
 */
inline bool moebius_identity_check(int k, int sigma, int order) {
  if (order == 0) return canonical_gf(k, sigma, 1)[0] == 1;
  const series reference = canonical_gf(k, sigma, order);

  auto bivariate_substitution = [&](const series& weight, auto&& counts) {
    series acc(order);
    series weight_power = series::one(order);  // weight^h
    for (long long h = 0; !weight_power.is_zero(); ++h) {
      series slice(order);
      for (long long n = 2 * h; n <= order; ++n)
        slice.set(static_cast<int>(n), Rational(counts(n, h)));
      acc += slice * weight_power;
      weight_power *= weight;
    }
    return acc;
  };

  const series w = stack_kernels(sigma, order).w;
  const series via_beta_free = bivariate_substitution(
      w, [&](long long n, long long h) { return beta_free_count(k, n, h); });
  if (via_beta_free != reference) return false;

  const series core_weight =
      series::monomial(1, 2 * (sigma - 1), order) * geometric(2, order);
  const series via_cores = bivariate_substitution(
      core_weight,
      [&](long long n, long long h) { return beta_free_core_count(k, n, h); });
  return via_cores == reference;
}

/// Rebuilds the canonical count table from the generating function; the
/// coefficients must come out as nonnegative integers.
inline count_table canonical_table_via_gf(int k, int sigma, int n_max) {
  const series gf = canonical_gf(k, sigma, n_max);
  count_table t;
  t.kind = table_kind::canonical;
  t.k = k;
  t.lambda = 4;
  t.sigma = sigma;
  t.provenance = "canonical_gf(k=" + std::to_string(k) +
                 ",sigma=" + std::to_string(sigma) + ")";
  for (int n = 0; n <= n_max; ++n) {
    const Rational& c = gf[n];
    if (denominator(c) != 1 || c < 0)
      throw std::logic_error("canonical_table_via_gf: non-integer coefficient");
    t.totals[n] = numerator(c);
  }
  return t;
}

}  // namespace pkenum
