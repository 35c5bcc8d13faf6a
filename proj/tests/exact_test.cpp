#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pathcover/exact.hpp"
#include "pathcover/harness.hpp"
#include "test_util.hpp"

using namespace pathcover;

TEST_CASE("known optima") {
  CHECK(exact_opt(tu::path_graph(4)) == 0);
  CHECK(exact_opt(tu::path_graph(5)) == 5);
  CHECK(exact_opt(tu::path_graph(9)) == 9);
  CHECK(exact_opt(tu::path_graph(10)) == 10);
  CHECK(exact_opt(tu::cycle_graph(5)) == 5);
  CHECK(exact_opt(tu::complete_graph(5)) == 5);
  CHECK(exact_opt(tu::mk(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 0);  // star
  CHECK(exact_opt(tu::petersen()) == 10);

  // Two disjoint 5-paths.
  Graph two = tu::mk(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  CHECK(exact_opt(two) == 10);
}

TEST_CASE("minimum length parameter") {
  CHECK(exact_opt(tu::path_graph(4), 4) == 4);
  CHECK(exact_opt(tu::path_graph(5), 6) == 0);
  CHECK(exact_opt(tu::path_graph(7), 3) == 7);
  // With threshold 3, a 7-cycle splits into a 3-path and a 4-path.
  CHECK(exact_opt(tu::cycle_graph(7), 3) == 7);
}

TEST_CASE("matches the subset-DP oracle on random graphs") {
  for (int n = 6; n <= 12; ++n)
    for (double p : {0.15, 0.3, 0.5})
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Graph g = gen_gnp(n, p, seed * 131 + n);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(seed);
        CHECK(exact_opt(g) == tu::brute_path_cover(g));
      }
}

TEST_CASE("witness cover is valid and matches the optimum") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = gen_gnp(10, 0.3, seed);
    Solution sol = exact_cover(g);
    auto res = validate_solution(g, sol, 5);
    CHECK(res.ok);
    CHECK(sol.covered() == exact_opt(g));
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int planted = 0;
    Graph g = gen_planted(13, 2, 0.05, seed, &planted);
    Solution sol = exact_cover(g);
    CHECK(validate_solution(g, sol, 5).ok);
    CHECK(sol.covered() == exact_opt(g));
    CHECK(sol.covered() >= planted);
  }
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_AS(exact_opt(Graph::from_edges(19, {})), BudgetExceeded);

  SearchBudget loose;
  loose.vertex_cap = 30;
  CHECK(exact_opt(Graph::from_edges(19, {}), 5, loose) == 0);

  SearchBudget tight;
  tight.node_cap = 10;
  CHECK_THROWS_AS(exact_opt(gen_gnp(12, 0.5, 7), 5, tight), BudgetExceeded);
}
