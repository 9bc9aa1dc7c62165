#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include "pkenum/diagram.hpp"
#include "pkenum/diagram_io.hpp"
#include "pkenum/oracle.hpp"

using namespace pkenum;

TEST_CASE("arc crossing predicate", "[diagram]") {
  CHECK(arcs_cross({1, 3}, {2, 4}));
  CHECK(arcs_cross({2, 4}, {1, 3}));
  CHECK_FALSE(arcs_cross({1, 4}, {2, 3}));  // nested
  CHECK_FALSE(arcs_cross({1, 2}, {3, 4}));  // disjoint
  CHECK_FALSE(arcs_cross({1, 3}, {3, 5}));  // shared endpoint does not cross
}

TEST_CASE("diagram construction validates", "[diagram]") {
  CHECK_NOTHROW(diagram(4, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(diagram(-1), std::invalid_argument);
  CHECK_THROWS_AS(diagram(4, {{1, 3}, {3, 4}}), std::invalid_argument);  // degree 2
  CHECK_THROWS_AS(diagram(4, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(diagram(4, {{2, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(diagram(4, {{3, 3}}), std::invalid_argument);
  const diagram d(5, {{2, 5}, {1, 4}});
  CHECK(d.arcs() == std::vector<arc>{{1, 4}, {2, 5}});  // sorted on input
  CHECK(d.partner(1) == 4);
  CHECK(d.partner(3) == 0);
  CHECK(d.is_isolated(3));
}

TEST_CASE("max_crossing", "[diagram]") {
  CHECK(max_crossing(diagram(4, {{1, 3}, {2, 4}})) == 2);
  CHECK(max_crossing(diagram(4, {{1, 2}, {3, 4}})) == 1);
  CHECK(max_crossing(diagram(6, {{1, 4}, {2, 5}, {3, 6}})) == 3);
  CHECK(max_crossing(diagram(6)) == 0);
  // crossing is pairwise: a path of crossings is not a mutually crossing set
  CHECK(max_crossing(diagram(8, {{1, 4}, {3, 6}, {5, 8}})) == 2);
}

TEST_CASE("min_arc_length", "[diagram]") {
  CHECK(min_arc_length(diagram(9, {{1, 9}, {2, 8}, {3, 7}})) == 4);
  CHECK(min_arc_length(diagram(8)) == unbounded_length);
  CHECK(min_arc_length(diagram(2, {{1, 2}})) == 1);
}

TEST_CASE("stack decomposition", "[diagram]") {
  SECTION("single stack of length 3") {
    auto runs = stack_decomposition(diagram(9, {{1, 9}, {2, 8}, {3, 7}}));
    REQUIRE(runs.size() == 1);
    CHECK(runs[0] == stack_run{{1, 9}, 3});
    CHECK(min_stack_length(diagram(9, {{1, 9}, {2, 8}, {3, 7}})) == 3);
  }
  SECTION("missing middle arc breaks the run") {
    auto runs = stack_decomposition(diagram(9, {{1, 9}, {3, 7}}));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == stack_run{{1, 9}, 1});
    CHECK(runs[1] == stack_run{{3, 7}, 1});
  }
  SECTION("length 2 run plus singleton") {
    auto runs = stack_decomposition(diagram(8, {{1, 8}, {2, 7}, {4, 6}}));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == stack_run{{1, 8}, 2});
    CHECK(runs[1] == stack_run{{4, 6}, 1});
  }
  SECTION("every arc lies in exactly one run") {
    const diagram d(12, {{1, 12}, {2, 11}, {3, 8}, {4, 7}, {9, 10}});
    std::size_t covered = 0;
    for (const auto& r : stack_decomposition(d)) {
      CHECK(r.length >= 1);
      covered += static_cast<std::size_t>(r.length);
    }
    CHECK(covered == d.arcs().size());
  }
}

TEST_CASE("class membership", "[diagram]") {
  const structure_class c343(3, 4, 3);
  CHECK(is_member(diagram(9, {{1, 9}, {2, 8}, {3, 7}}), c343));
  CHECK_FALSE(is_member(diagram(8, {{1, 8}, {2, 7}, {3, 6}}), c343));  // 3-arc inside
  CHECK(is_member(diagram(8), c343));  // arcless diagrams are in every class
  CHECK_THROWS_AS(structure_class(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(structure_class(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(structure_class(2, 1, 0), std::invalid_argument);
}

TEST_CASE("beta arcs", "[diagram]") {
  CHECK(has_beta_arc(diagram(3, {{1, 3}})));               // isolated midpoint
  CHECK_FALSE(has_beta_arc(diagram(5, {{1, 3}, {2, 5}})));  // midpoint paired
  CHECK(has_beta_arc(diagram(4, {{1, 4}})));               // two isolated inside
  CHECK_FALSE(has_beta_arc(diagram(4, {{1, 4}, {2, 3}})));
  CHECK_FALSE(has_beta_arc(diagram(6)));
}

TEST_CASE("core map collapses stacks to innermost arcs", "[diagram]") {
  SECTION("single 3-stack") {
    const diagram core = core_map(diagram(9, {{1, 9}, {2, 8}, {3, 7}}));
    CHECK(core == diagram(5, {{3 - 2, 7 - 2}}));  // survivors 3..7 relabeled
    CHECK(core.vertices() == 5);
    CHECK(core.arcs() == std::vector<arc>{{1, 5}});
  }
  SECTION("arcless diagrams are fixed points") {
    CHECK(core_map(diagram(6)) == diagram(6));
  }
  SECTION("stack collapse can create 2-arcs in the core") {
    // two interleaved 3-stacks; contracting each leaves the crossing pair
    // (1,3),(2,4), and (1,3) is a 2-arc whose midpoint is paired
    const diagram d(12, {{1, 9}, {2, 8}, {3, 7}, {4, 12}, {5, 11}, {6, 10}});
    REQUIRE(is_member(d, structure_class(3, 4, 3)));
    const diagram core = core_map(d);
    CHECK(core == diagram(4, {{1, 3}, {2, 4}}));
    CHECK_FALSE(has_beta_arc(core));
  }
}

TEST_CASE("core map properties on all small diagrams", "[diagram][property]") {
  for (int n = 0; n <= 8; ++n) {
    oracle::for_each_matching(n, [&](const std::vector<arc>& arcs) {
      const diagram d(n, arcs);
      const diagram core = core_map(d);
      CHECK(is_core(core));
      CHECK(core_map(core) == core);  // idempotence
      if (!core.arcs().empty()) CHECK(min_stack_length(core) == 1);
      // mirror symmetry of the crossing number
      CHECK(max_crossing(reversed(d)) == max_crossing(d));
    });
  }
}

TEST_CASE("cores of canonical structures avoid 1-arcs and beta-arcs",
          "[diagram][property]") {
  for (int n = 8; n <= 11; ++n) {
    for (const diagram& d : oracle::enumerate_class(n, structure_class(3, 4, 3))) {
      const diagram core = core_map(d);
      if (core.arcs().empty()) continue;
      CHECK(min_arc_length(core) >= 2);
      CHECK_FALSE(has_beta_arc(core));
    }
  }
}

TEST_CASE("brute-force class enumeration", "[oracle]") {
  SECTION("smallest canonical structures") {
    auto at8 = oracle::enumerate_class(8, structure_class(3, 4, 3));
    REQUIRE(at8.size() == 1);
    CHECK(at8[0] == diagram(8));

    auto at9 = oracle::enumerate_class(9, structure_class(3, 4, 3));
    REQUIRE(at9.size() == 2);
    CHECK(at9[0] == diagram(9));
    CHECK(at9[1] == diagram(9, {{1, 9}, {2, 8}, {3, 7}}));

    CHECK(oracle::enumerate_class(10, structure_class(3, 4, 3)).size() == 4);
    CHECK(oracle::count_class(10, structure_class(3, 4, 3)) == 4);
  }
  SECTION("deterministic order") {
    auto a = oracle::enumerate_class(9, structure_class(3, 2, 1));
    auto b = oracle::enumerate_class(9, structure_class(3, 2, 1));
    CHECK(a == b);
  }
  SECTION("per-arc buckets sum to the total") {
    auto buckets = oracle::count_class_by_arcs(10, structure_class(3, 4, 3));
    Count total = 0;
    for (const auto& [h, c] : buckets) total += c;
    CHECK(total == oracle::count_class(10, structure_class(3, 4, 3)));
    CHECK(buckets.at(0) == 1);
  }
}

TEST_CASE("oracle size limit", "[oracle]") {
  CHECK_THROWS_AS(oracle::count_class(17, structure_class(3, 4, 3)),
                  oracle::vertex_limit_error);
  CHECK_THROWS_AS(oracle::enumerate_class(10, structure_class(3, 4, 3), 9),
                  oracle::vertex_limit_error);
  CHECK_NOTHROW(oracle::count_class(10, structure_class(3, 4, 3), 10));
  try {
    oracle::count_beta_free(17, 2, 3);
    FAIL("expected vertex_limit_error");
  } catch (const oracle::vertex_limit_error& e) {
    CHECK(e.n() == 17);
    CHECK(e.limit() == oracle::default_vertex_limit);
  }
}

TEST_CASE("beta-free oracle counts", "[oracle]") {
  CHECK(oracle::count_beta_free(5, 0, 3) == 1);  // the empty diagram
  CHECK(oracle::count_beta_free(4, 1, 3) == 0);  // every candidate is a beta-arc
  CHECK(oracle::count_beta_free(5, 2, 3) == 5);
  CHECK(oracle::count_beta_free_cores(10, 2, 3) == 236);
}

TEST_CASE("diagram text format round trip", "[io]") {
  SECTION("canonical write/read") {
    const diagram d(9, {{1, 9}, {2, 8}, {3, 7}});
    const std::string text = to_text(d);
    CHECK(text == "n=9\n1 9\n2 8\n3 7\n");
    CHECK(parse_diagram(text) == d);
    CHECK(to_text(parse_diagram(text)) == text);
  }
  SECTION("comments and blank lines") {
    const diagram d = parse_diagram(
        "# a structure\n\nn=5  # five vertices\n1 4 # outer\n\n# done\n2 5\n");
    CHECK(d == diagram(5, {{1, 4}, {2, 5}}));
  }
  SECTION("empty diagram") {
    CHECK(parse_diagram("n=0\n") == diagram(0));
    CHECK(to_text(diagram(3)) == "n=3\n");
  }
  SECTION("round trip over every enumerated member") {
    for (const diagram& d : oracle::enumerate_class(9, structure_class(3, 2, 1)))
      CHECK(parse_diagram(to_text(d)) == d);
  }
  SECTION("malformed inputs") {
    CHECK_THROWS_AS(parse_diagram(""), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("m=5\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=x\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=5\n1\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=5\n1 2 3\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=5\n4 2\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=5\n1 6\n"), diagram_format_error);
    CHECK_THROWS_AS(parse_diagram("n=5\n1 3\n3 5\n"), diagram_format_error);
  }
}
