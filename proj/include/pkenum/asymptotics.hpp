#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pkenum/enumeration.hpp"
#include "pkenum/numeric.hpp"

namespace pkenum {

/// Families of growth equations theta(x) = rho_k, keyed the same way the CLI
/// names them: arc length 2 or 4, plain or with a minimum stack length.
enum class growth_kind { k21, k41, k2sigma, k4sigma };

struct root_equation {
  growth_kind kind;
  int k;          // crossing bound, >= 2
  int sigma = 1;  // used by the *sigma kinds

  root_equation(growth_kind kind_, int k_, int sigma_ = 1)
      : kind(kind_), k(k_), sigma(sigma_) {
    if (k < 2) throw std::invalid_argument("root_equation: k < 2");
    if ((kind == growth_kind::k2sigma || kind == growth_kind::k4sigma) && sigma < 1)
      throw std::invalid_argument("root_equation: sigma < 1");
    if (kind == growth_kind::k4sigma && sigma < 3)
      throw std::invalid_argument("root_equation: k4sigma needs sigma >= 3");
  }

  /// Dominant real singularity 1/(2(k-1)) of the matching generating function.
  Real rho() const { return Real(1) / (2 * (k - 1)); }
};

class no_root_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Algebraic kernel of the arc-length-4 growth equation: the root of
 *
 *   (1 - 2z - z^2 + z^4) r^2 - (1 + 2z^2 - z^3) r - z = 0
 *
 * with r(0) = 1, evaluated through the discriminant
 * u(z) = sqrt(1 + 4z - 4z^2 - 6z^3 + 4z^4 + z^6) as
 * r(z) = (1 + 2z^2 - z^3 + u(z)) / (2 (1 - 2z - z^2 + z^4)).
 * Throws outside the radicand's positivity domain.
 */
inline Real arc4_kernel(const Real& z) {
  const Real z2 = z * z;
  const Real radicand = 1 + 4 * z - 4 * z2 - 6 * z2 * z + 4 * z2 * z2 + z2 * z2 * z2;
  if (radicand < 0)
    throw std::domain_error("arc4_kernel: negative radicand");
  const Real den = 2 * (1 - 2 * z - z2 + z2 * z2);
  if (den == 0) throw std::domain_error("arc4_kernel: zero denominator");
  return (1 + 2 * z2 - z2 * z + sqrt(radicand)) / den;
}

/// theta(x) of the growth equation theta(x) = rho_k. Throws std::domain_error
/// where a denominator vanishes or a radicand goes negative.
inline Real theta(const root_equation& eq, const Real& x) {
  using std::domain_error;
  const Real x2 = x * x;
  switch (eq.kind) {
    case growth_kind::k21:
      return x / (x2 - x + 1);  // denominator >= 3/4 on the reals
    case growth_kind::k2sigma: {
      const Real den = pow(x2, eq.sigma) - x2 + 1;
      if (den <= 0) throw domain_error("theta: kernel denominator vanished");
      const Real u = pow(x2, eq.sigma - 1) / den;
      const Real d = u * x2 - x + 1;
      if (d == 0) throw domain_error("theta: denominator vanished");
      return sqrt(u) * x / d;
    }
    case growth_kind::k4sigma: {
      const Real den = 1 - x2 + pow(x2, eq.sigma);
      if (den <= 0) throw domain_error("theta: kernel denominator vanished");
      const Real w = pow(x2, eq.sigma - 1) / den;
      const Real v = 1 - x + w * (x2 + x2 * x + x2 * x2);
      if (v == 0) throw domain_error("theta: denominator vanished");
      return sqrt(w) * x / v;
    }
    case growth_kind::k41: {
      const Real r = arc4_kernel(-x2);
      const Real d = 1 - x * r;
      if (d == 0) throw domain_error("theta: denominator vanished");
      return x * r / d;
    }
  }
  throw std::logic_error("theta: unknown kind");
}

/// Solved growth record: gamma solves theta(gamma) = rho_k, the exponential
/// growth rate is 1/gamma.
struct growth_result {
  int k = 0;
  int sigma = 1;
  int lambda = 2;
  Real gamma;
  Real rate;
  bool dominance_verified = false;
  int iterations = 0;
  Real residual;
  std::string note;
};

namespace detail {

inline Real bisect(const root_equation& eq, const Real& target, Real lo,
                   Real hi, Real lo_val, int& iterations) {
  // narrow far below the residual target; ~200 halvings from 1e-3 suffice
  const Real width_goal("1e-60");
  while (hi - lo > width_goal && iterations < 400) {
    ++iterations;
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const Real val = theta(eq, mid) - target;
    if (val == 0) return mid;
    if ((val < 0) == (lo_val < 0)) {
      lo = mid;
      lo_val = val;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace detail

/**
 * All real solutions of theta(x) = target on (0, 1), located by scanning for
 * sign changes on a uniform grid and bisecting each bracket. The scan stops
 * early where theta leaves its domain (k41 radicand boundary).
 */
inline std::vector<Real> real_solutions(const root_equation& eq,
                                        const Real& target,
                                        const Real& grid_step = Real("1e-3")) {
  if (grid_step <= 0) throw std::invalid_argument("real_solutions: bad step");
  std::vector<Real> roots;
  Real prev_x = 0;
  Real prev_val = theta(eq, prev_x) - target;
  if (prev_val == 0) roots.push_back(prev_x);
  for (Real x = grid_step; x < 1; x += grid_step) {
    Real val;
    try {
      val = theta(eq, x) - target;
    } catch (const std::domain_error&) {
      break;  // domain end; no further real evaluation possible
    }
    if (val == 0) {
      roots.push_back(x);
    } else if ((val < 0) != (prev_val < 0) && prev_val != 0) {
      int iterations = 0;
      roots.push_back(detail::bisect(eq, target, prev_x, x, prev_val, iterations));
    }
    prev_x = x;
    prev_val = val;
  }
  return roots;
}

/**
 * Verifies on the real line that no solution of theta(x) = -rho_k has modulus
 * <= gamma. This is a real-line check only (complex roots are out of numeric
 * scope); for the k4sigma kind outside k = 3..9 the flag is forced false, as
 * uniqueness of the dominant singularity is established only in that range.
 */
inline bool dominance_check(const root_equation& eq, const Real& gamma,
                            const Real& grid_step = Real("1e-3")) {
  if (eq.kind == growth_kind::k4sigma && (eq.k < 3 || eq.k > 9)) return false;
  for (const Real& s : real_solutions(eq, -eq.rho(), grid_step))
    if (abs(s) <= gamma) return false;
  return true;
}

/**
 * Minimal positive real solution of theta(x) = rho_k on (0, 1): grid scan for
 * the first sign change, then bisection. Throws no_root_error when the whole
 * grid shows no sign change, std::domain_error when theta cannot be evaluated
 * before a root is bracketed.
 */
inline growth_result solve_growth(const root_equation& eq,
                                  const Real& tol = Real("1e-12"),
                                  const Real& grid_step = Real("1e-3")) {
  if (tol <= 0) throw std::invalid_argument("solve_growth: tol must be > 0");
  const Real target = eq.rho();

  growth_result out;
  out.k = eq.k;
  out.sigma = (eq.kind == growth_kind::k2sigma || eq.kind == growth_kind::k4sigma)
                  ? eq.sigma
                  : 1;
  out.lambda =
      (eq.kind == growth_kind::k41 || eq.kind == growth_kind::k4sigma) ? 4 : 2;

  Real prev_x = 0;
  Real prev_val = theta(eq, prev_x) - target;
  bool bracketed = false;
  bool domain_truncated = false;
  Real gamma;
  int iterations = 0;
  for (Real x = grid_step; x < 1; x += grid_step) {
    Real val;
    try {
      val = theta(eq, x) - target;
    } catch (const std::domain_error&) {
      domain_truncated = true;  // e.g. the k41 radicand boundary
      break;
    }
    if (val == 0) {
      gamma = x;
      bracketed = true;
      break;
    }
    if ((val < 0) != (prev_val < 0)) {
      gamma = detail::bisect(eq, target, prev_x, x, prev_val, iterations);
      bracketed = true;
      break;
    }
    prev_x = x;
    prev_val = val;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "solve_growth: no sign change of theta - rho on (0, "
        << (domain_truncated ? prev_x.convert_to<double>() : 1.0) << ")";
    throw no_root_error(msg.str());
  }

  out.gamma = gamma;
  out.rate = Real(1) / gamma;
  out.iterations = iterations;
  out.residual = abs(theta(eq, gamma) - target);
  if (out.residual > tol)
    throw std::runtime_error("solve_growth: residual above tolerance");
  if (out.rate <= 1)
    throw std::runtime_error("solve_growth: rate <= 1 contradicts growth");
  out.dominance_verified = dominance_check(eq, gamma, grid_step);
  if (eq.kind == growth_kind::k4sigma && (eq.k < 3 || eq.k > 9))
    out.note = "real-line scan only; uniqueness established for k=3..9 only";
  else
    out.note = "real-line scan only";
  return out;
}

/// Subexponential exponent -( (k-1)^2 + (k-1)/2 ) of the structure-count
/// asymptotics; -5 for k = 3.
inline double subexponential_exponent(int k) {
  if (k < 2) throw std::invalid_argument("subexponential_exponent: k < 2");
  return -((k - 1.0) * (k - 1.0) + (k - 1.0) / 2.0);
}

/// Consecutive-ratio diagnostic from exact counts.
struct rate_estimate {
  long long n = 0;    // ratio taken as T(n+1)/T(n)
  double ratio = 0;   // raw ratio at the largest available n
  double corrected = 0;  // ratio * ((n+1)/n)^{(k-1)^2+(k-1)/2}
};

/// All consecutive ratios (n, T(n+1)/T(n)) available in the table.
inline std::vector<std::pair<long long, double>> ratio_sequence(
    const count_table& table) {
  std::vector<std::pair<long long, double>> out;
  for (auto it = table.totals.begin(); it != table.totals.end(); ++it) {
    auto next = std::next(it);
    if (next == table.totals.end()) break;
    if (next->first != it->first + 1 || it->second == 0) continue;
    const Real r = Real(next->second) / Real(it->second);
    out.emplace_back(it->first, r.convert_to<double>());
  }
  return out;
}

/**
 * Ratio T(n+1)/T(n) at the largest available n, plus the estimate corrected
 * for the subexponential factor n^{-(k-1)^2-(k-1)/2}. Convergence of the raw
 * ratio is slow (algebraic, not geometric), which is what the corrected value
 * is for. Requires at least window+1 consecutive trailing entries.
 */
inline rate_estimate empirical_rate(const count_table& table, int window) {
  if (window < 1) throw std::invalid_argument("empirical_rate: window < 1");
  if (table.totals.size() < static_cast<std::size_t>(window) + 1)
    throw std::invalid_argument("empirical_rate: insufficient data");
  auto it = table.totals.rbegin();
  for (int i = 0; i < window; ++i) {
    auto next = std::next(it);
    if (next->first != it->first - 1)
      throw std::invalid_argument("empirical_rate: entries not consecutive");
    it = next;
  }
  const long long n_last = table.totals.rbegin()->first;
  const Count& t_last = table.totals.rbegin()->second;
  const Count& t_prev = table.totals.at(n_last - 1);
  if (t_prev == 0) throw std::invalid_argument("empirical_rate: zero count");

  rate_estimate est;
  est.n = n_last - 1;
  est.ratio = (Real(t_last) / Real(t_prev)).convert_to<double>();
  const double alpha = -subexponential_exponent(table.k);
  est.corrected =
      est.ratio * std::pow((est.n + 1.0) / est.n, alpha);
  return est;
}

/**
 * Reference data: the candidate dominant singularities of the k-noncrossing
 * matching generating function for k = 3..9 (roots of the leading polynomial
 * of its differential equation). Contains +-rho_k = +-1/(2(k-1)) for every
 * supported k.
 */
inline std::vector<Rational> matching_singularity_candidates(int k) {
  auto build = [k](std::initializer_list<long long> dens) {
    std::vector<Rational> out;
    for (long long d : dens) {
      out.emplace_back(Rational(-1, d));
      out.emplace_back(Rational(1, d));
    }
    std::sort(out.begin(), out.end());
    const Rational rho(1, 2 * (k - 1));
    if (!std::binary_search(out.begin(), out.end(), rho) ||
        !std::binary_search(out.begin(), out.end(), -rho))
      throw std::logic_error(
          "matching_singularity_candidates: rho_k missing from root set");
    return out;
  };
  switch (k) {
    case 3: return build({4});
    case 4: return build({2, 6});
    case 5: return build({4, 8});
    case 6: return build({2, 6, 10});
    case 7: return build({4, 8, 12});
    case 8: return build({2, 6, 10, 14});
    case 9: return build({4, 8, 12, 16});
    default:
      throw std::invalid_argument(
          "matching_singularity_candidates: k must be in 3..9");
  }
}

}  // namespace pkenum
