#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkenum/numeric.hpp"

namespace pkenum {

/**
 * Truncated formal power series with exact rational coefficients, dense up to
 * a fixed order N (N+1 coefficients). All arithmetic is exact modulo x^{N+1};
 * binary operations truncate to the smaller order of the two operands.
 */
class series {
 public:
  explicit series(int order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  }

  static series constant(const Rational& c, int order) {
    series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static series one(int order) { return constant(1, order); }

  static series monomial(const Rational& c, int power, int order) {
    if (power < 0) throw std::invalid_argument("series: negative power");
    series s(order);
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int i) const {
    return coeffs_.at(static_cast<std::size_t>(i));
  }

  void set(int i, Rational v) {
    coeffs_.at(static_cast<std::size_t>(i)) = std::move(v);
  }

  bool is_zero() const {
    for (const Rational& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Index of the first nonzero coefficient; order()+1 when identically zero.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return order() + 1;
  }

  series truncated(int new_order) const {
    series out(new_order);
    const int m = std::min(new_order, order());
    for (int i = 0; i <= m; ++i) out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  friend series operator+(const series& a, const series& b) {
    series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i)
      out.coeffs_[static_cast<std::size_t>(i)] = a[i] + b[i];
    return out;
  }

  friend series operator-(const series& a, const series& b) {
    series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i)
      out.coeffs_[static_cast<std::size_t>(i)] = a[i] - b[i];
    return out;
  }

  friend series operator-(const series& a) {
    series out(a.order());
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[static_cast<std::size_t>(i)] = -a[i];
    return out;
  }

  friend series operator*(const series& a, const series& b) {
    series out(std::min(a.order(), b.order()));
    const int n = out.order();
    for (int i = 0; i <= std::min(a.order(), n); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= n && j <= b.order(); ++j) {
        if (b[j] == 0) continue;
        out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return out;
  }

  friend series operator*(const Rational& c, const series& a) {
    series out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.coeffs_[static_cast<std::size_t>(i)] = c * a[i];
    return out;
  }

  series& operator+=(const series& b) { return *this = *this + b; }
  series& operator-=(const series& b) { return *this = *this - b; }
  series& operator*=(const series& b) { return *this = *this * b; }

  /// Multiplicative inverse; requires a nonzero constant term.
  series inverse() const {
    if (coeffs_[0] == 0)
      throw std::domain_error("series::inverse: constant term is zero");
    series out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (int n = 1; n <= order(); ++n) {
      Rational acc = 0;
      for (int i = 1; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * out[n - i];
      out.coeffs_[static_cast<std::size_t>(n)] = -acc / coeffs_[0];
    }
    return out;
  }

  friend series operator/(const series& a, const series& b) {
    if (b[0] == 0) throw std::domain_error("series division by a non-unit");
    series out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) {
      Rational acc = a[n];
      for (int i = 1; i <= std::min(n, b.order()); ++i)
        acc -= b[i] * out[n - i];
      out.coeffs_[static_cast<std::size_t>(n)] = acc / b[0];
    }
    return out;
  }

  /// Composition a(inner); the inner series must have zero constant term.
  series compose(const series& inner) const {
    if (inner[0] != 0)
      throw std::domain_error("series::compose: inner constant term must be 0");
    const int n = std::min(order(), inner.order());
    series out = series::constant(coeffs_[static_cast<std::size_t>(order())], n);
    for (int i = order() - 1; i >= 0; --i) {
      out = out * inner;
      out.coeffs_[0] += coeffs_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  /// Square root of a series with constant term 1 (branch with value 1 at 0).
  series sqrt_unit() const {
    if (coeffs_[0] != 1)
      throw std::domain_error("series::sqrt_unit: constant term must be 1");
    series out(order());
    out.coeffs_[0] = 1;
    for (int n = 1; n <= order(); ++n) {
      Rational acc = coeffs_.size() > static_cast<std::size_t>(n)
                         ? coeffs_[static_cast<std::size_t>(n)]
                         : Rational(0);
      for (int i = 1; i <= n - 1; ++i) acc -= out[i] * out[n - i];
      out.coeffs_[static_cast<std::size_t>(n)] = acc / 2;
    }
    return out;
  }

  /// Divide by x^powers; every coefficient below `powers` must vanish.
  series shifted_down(int powers) const {
    if (powers < 0) throw std::invalid_argument("series: negative shift");
    for (int i = 0; i < std::min(powers, order() + 1); ++i)
      if (coeffs_[static_cast<std::size_t>(i)] != 0)
        throw std::domain_error("series::shifted_down: valuation too small");
    series out(order() - powers >= 0 ? order() - powers : 0);
    for (int i = 0; i + powers <= order() && i <= out.order(); ++i)
      out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i + powers)];
    return out;
  }

  friend bool operator==(const series&, const series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Geometric series 1/(1 - x^step) truncated to the given order.
inline series geometric(int step, int order) {
  if (step < 1) throw std::invalid_argument("geometric: step < 1");
  series out(order);
  for (int i = 0; i <= order; i += step) out.set(i, 1);
  return out;
}

/// Dump format: header "# order=N recipe=<id>", then one line per
/// coefficient, "n<TAB>numerator/denominator".
inline void dump_series(std::ostream& out, const series& s,
                        const std::string& recipe_id) {
  out << "# order=" << s.order() << " recipe=" << recipe_id << '\n';
  for (int n = 0; n <= s.order(); ++n) {
    out << n << '\t' << numerator(s[n]).str() << '/'
        << denominator(s[n]).str() << '\n';
  }
}

inline std::string dump_series(const series& s, const std::string& recipe_id) {
  std::ostringstream out;
  dump_series(out, s, recipe_id);
  return out.str();
}

}  // namespace pkenum
