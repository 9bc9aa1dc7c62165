#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "pkenum/series.hpp"

using namespace pkenum;

namespace {

// deterministic small-rational series generator for property checks
series random_series(std::uint64_t seed, int order, bool unit_constant) {
  std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % 19) - 9;
  };
  series s(order);
  for (int i = 0; i <= order; ++i)
    s.set(i, Rational(next(), 1 + static_cast<long long>((state >> 21) % 7)));
  if (unit_constant) s.set(0, 1);
  return s;
}

}  // namespace

TEST_CASE("series basics", "[series]") {
  const int N = 8;
  const series one = series::one(N);
  const series x = series::monomial(1, 1, N);

  SECTION("(1+x)(1-x) = 1-x^2") {
    const series p = (one + x) * (one - x);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == -1);
    for (int i = 3; i <= N; ++i) CHECK(p[i] == 0);
  }
  SECTION("1/(1-x) is geometric") {
    const series g = one / (one - x);
    for (int i = 0; i <= N; ++i) CHECK(g[i] == 1);
    CHECK(g == geometric(1, N));
  }
  SECTION("geometric composed with x^2") {
    const series g = geometric(1, N).compose(series::monomial(1, 2, N));
    for (int i = 0; i <= N; ++i) CHECK(g[i] == (i % 2 == 0 ? 1 : 0));
    CHECK(g == geometric(2, N));
  }
  SECTION("monomial beyond the order truncates to zero") {
    CHECK(series::monomial(5, 9, N).is_zero());
  }
  SECTION("valuation") {
    CHECK(series(5).valuation() == 6);
    CHECK(series::monomial(2, 3, 5).valuation() == 3);
    CHECK(one.valuation() == 0);
  }
  SECTION("binary operations truncate to the smaller order") {
    CHECK((series::one(9) + series::one(4)).order() == 4);
    CHECK((series::one(3) * series::one(7)).order() == 3);
  }
}

TEST_CASE("series error paths", "[series]") {
  const int N = 6;
  CHECK_THROWS_AS(series(-1), std::invalid_argument);
  CHECK_THROWS_AS(series::one(N) / series::monomial(1, 1, N), std::domain_error);
  CHECK_THROWS_AS(series::monomial(1, 1, N).inverse(), std::domain_error);
  CHECK_THROWS_AS(series::one(N).compose(series::one(N)), std::domain_error);
  CHECK_THROWS_AS((series::one(N) + series::one(N)).sqrt_unit(), std::domain_error);
  CHECK_THROWS_AS(series::monomial(1, 1, N).shifted_down(2), std::domain_error);
}

TEST_CASE("series ring laws on pseudo-random inputs", "[series][property]") {
  const int N = 12;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const series a = random_series(seed, N, false);
    const series b = random_series(seed + 100, N, false);
    const series c = random_series(seed + 200, N, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == series(N));
  }
}

TEST_CASE("inverse, division and square root round-trip", "[series][property]") {
  const int N = 12;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const series u = random_series(seed, N, true);  // unit constant term
    CHECK(u * u.inverse() == series::one(N));
    const series a = random_series(seed + 50, N, false);
    CHECK((a / u) * u == a);
    const series r = u.sqrt_unit();
    CHECK(r * r == u);
  }
}

TEST_CASE("composition respects substitution", "[series]") {
  const int N = 10;
  // p(y) = 1 + 2y + 3y^2 at y = x + x^2
  series p(N);
  p.set(0, 1);
  p.set(1, 2);
  p.set(2, 3);
  const series inner = series::monomial(1, 1, N) + series::monomial(1, 2, N);
  const series expect = series::one(N) + Rational(2) * inner + Rational(3) * (inner * inner);
  CHECK(p.compose(inner) == expect);
}

TEST_CASE("shifted_down divides by a power of x", "[series]") {
  const series s = series::monomial(3, 4, 9) + series::monomial(5, 7, 9);
  const series t = s.shifted_down(4);
  CHECK(t.order() == 5);
  CHECK(t[0] == 3);
  CHECK(t[3] == 5);
}

TEST_CASE("series dump format", "[series]") {
  series s(2);
  s.set(0, 1);
  s.set(2, Rational(-3, 7));
  CHECK(dump_series(s, "test") ==
        "# order=2 recipe=test\n"
        "0\t1/1\n"
        "1\t0/1\n"
        "2\t-3/7\n");
}
