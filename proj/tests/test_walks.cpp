#include <catch2/catch_amalgamated.hpp>

#include <future>
#include <vector>

#include "pkenum/combinatorics.hpp"
#include "pkenum/oracle.hpp"
#include "pkenum/walks.hpp"

using namespace pkenum;

namespace {

Count catalan(int m) { return binomial(2 * m, m) / (m + 1); }

}  // namespace

TEST_CASE("perfect matching counts, small cases", "[walks]") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(perfect_matching_count(k, 0) == 1);
    CHECK(perfect_matching_count(k, 1) == 1);
  }
  CHECK(perfect_matching_count(2, 3) == 5);
  CHECK(perfect_matching_count(3, 3) == 14);  // all 15 matchings minus the triple crossing
  CHECK(perfect_matching_count(3, -1) == 0);
}

TEST_CASE("noncrossing perfect matchings are Catalan", "[walks]") {
  for (int m = 0; m <= 10; ++m)
    CHECK(perfect_matching_count(2, m) == catalan(m));
}

TEST_CASE("walk DP equals brute force", "[walks][oracle]") {
  for (int k = 2; k <= 4; ++k)
    for (int m = 0; 2 * m <= 10; ++m)
      CHECK(perfect_matching_count(k, m) == oracle::count_perfect_matchings(m, k));
}

TEST_CASE("partial matching counts and the zero extension", "[walks]") {
  CHECK(partial_matching_count(3, 4, 4) == 1);
  CHECK(partial_matching_count(3, 4, 0) == 3);
  CHECK(partial_matching_count(3, 5, 2) == 0);  // parity violation
  CHECK(partial_matching_count(3, 5, 1) == 15);
  CHECK(partial_matching_count(3, -2, 0) == 0);
  CHECK(partial_matching_count(3, 4, -1) == 0);
  CHECK(partial_matching_count(3, 4, 5) == 0);
}

TEST_CASE("total matching counts", "[walks]") {
  for (int k = 2; k <= 5; ++k) {
    CHECK(total_matching_count(k, 0) == 1);
    CHECK(total_matching_count(k, 1) == 1);
  }
  CHECK(total_matching_count(2, 3) == 4);
  CHECK(total_matching_count(3, 4) == 10);
  // M_k(n) is the size of <k,1,1> on [n]
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n <= 8; ++n)
      CHECK(total_matching_count(k, n) ==
            oracle::count_class(n, structure_class(k, 1, 1)));
}

TEST_CASE("growth of perfect matching counts", "[walks][slow]") {
  // ratio f(m+1)/f(m) climbs monotonically to the limit (2(k-1))^2; the
  // subexponential factor m^{-(k-1)^2-(k-1)/2} keeps it below for a long
  // while (for k=4 the 10% band is reached only around m=100)
  SECTION("k=3") {
    walk_counter counter(3);
    Count prev = counter.perfect(1);
    double last_ratio = 0;
    for (int m = 2; m <= 61; ++m) {
      const Count cur = counter.perfect(m);
      const double ratio = (Real(cur) / Real(prev)).convert_to<double>();
      CHECK(ratio > last_ratio);
      CHECK(ratio < 16.0);
      last_ratio = ratio;
      prev = cur;
    }
    CHECK(last_ratio > 16.0 * 0.9);
  }
  SECTION("k=4") {
    walk_counter counter(4);
    const double ratio =
        (Real(counter.perfect(101)) / Real(counter.perfect(100))).convert_to<double>();
    CHECK(ratio < 36.0);
    CHECK(ratio > 36.0 * 0.9);
  }
}

TEST_CASE("walk counter cache behaviour", "[walks]") {
  SECTION("capped cache still answers correctly") {
    walk_counter capped(3, 3);
    walk_counter plain(3);
    for (int m : {5, 2, 7, 5}) CHECK(capped.perfect(m) == plain.perfect(m));
  }
  SECTION("repeated queries are consistent") {
    walk_counter counter(4);
    const Count first = counter.perfect(12);
    CHECK(counter.perfect(12) == first);
    CHECK(counter.perfect(6) == perfect_matching_count(4, 6));
  }
  SECTION("invalid crossing bound") {
    CHECK_THROWS_AS(walk_counter(1), std::invalid_argument);
  }
}

TEST_CASE("concurrent queries agree with serial ones", "[walks]") {
  const Count expected = perfect_matching_count(3, 25);
  std::vector<std::future<Count>> jobs;
  for (int i = 0; i < 4; ++i)
    jobs.push_back(std::async(std::launch::async, [] {
      return perfect_matching_count(3, 25);
    }));
  for (auto& job : jobs) CHECK(job.get() == expected);
}
