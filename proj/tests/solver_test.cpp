#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pathcover/exact.hpp"
#include "pathcover/harness.hpp"
#include "pathcover/solver.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace pathcover;

namespace {

// opt <= (26+sqrt(3826))/35 * alg, checked in exact integer arithmetic:
// 35*opt - 26*alg <= 0, or (35*opt - 26*alg)^2 <= 3826 * alg^2.
bool ratio_ok(long long opt, long long alg) {
  long long lhs = 35 * opt - 26 * alg;
  return lhs <= 0 || lhs * lhs <= 3826 * alg * alg;
}

void check_solution(const Graph& g, const SolveResult& res) {
  auto val = validate_solution(g, res.sol, 5);
  if (!val.ok) CAPTURE(val.message);
  CHECK(val.ok);
}

std::vector<std::vector<int>> flat(const Solution& s) {
  std::vector<std::vector<int>> out;
  for (const auto& p : s.paths) out.push_back(p.verts);
  return out;
}

}  // namespace

TEST_CASE("branch decision arithmetic") {
  CHECK(trunks_suffice(0, 0));
  CHECK(trunks_suffice(1, 0));
  CHECK(trunks_suffice(2, 1));   // 64^2 = 4096 > 3826
  CHECK_FALSE(trunks_suffice(1, 1));  // 19^2 = 361 <= 3826
  CHECK_FALSE(trunks_suffice(3, 2));
  CHECK(trunks_suffice(5, 2));
  CHECK_FALSE(trunks_suffice(3, 3));
  CHECK_FALSE(trunks_suffice(0, 1));
}

TEST_CASE("tiny instances go to the exact solver") {
  SolveResult r4 = solve(tu::path_graph(4));
  CHECK(r4.base_case);
  CHECK(r4.sol.covered() == 0);
  CHECK(r4.depth() == 1);

  SolveResult r5 = solve(tu::path_graph(5));
  CHECK(r5.base_case);
  CHECK(r5.sol.covered() == 5);
  check_solution(tu::path_graph(5), r5);
}

TEST_CASE("small named graphs") {
  Graph p9 = tu::path_graph(9);
  SolveResult r9 = solve(p9);
  CHECK_FALSE(r9.base_case);
  CHECK(r9.sol.covered() == 9);
  check_solution(p9, r9);

  Graph c5 = tu::cycle_graph(5);
  SolveResult rc = solve(c5);
  CHECK(rc.sol.covered() == 5);
  check_solution(c5, rc);

  Graph pet = tu::petersen();
  SolveResult rp = solve(pet);
  check_solution(pet, rp);
  CHECK(ratio_ok(10, rp.sol.covered()));

  // A star has no 5-vertex path at all.
  Graph star = tu::mk(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}});
  SolveResult rs = solve(star);
  CHECK(rs.sol.covered() == 0);
}

TEST_CASE("solver on the structured fixtures") {
  for (const tu::TestState& st : {tu::fixture_responsible(), tu::fixture_potential11()}) {
    SolveResult res = solve(st.g);
    check_solution(st.g, res);
    CHECK(res.sol.covered() >= 5);
    // Deterministic re-run.
    SolveResult again = solve(st.g);
    CHECK(flat(again.sol) == flat(res.sol));
    CHECK(again.depth() == res.depth());
  }
}

TEST_CASE("matches the approximation guarantee against the exact optimum") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 14; ++seed) {
    for (int n : {6, 8, 10, 12, 14}) {
      Graph g;
      if (seed % 3 == 0) {
        g = gen_planted(n, 1 + static_cast<int>(seed % 2), 0.1, seed * 997 + n);
      } else {
        double p = 0.12 + 0.06 * static_cast<double>(seed % 5);
        g = gen_gnp(n, p, seed * 997 + n);
      }
      SolveResult res = solve(g);
      check_solution(g, res);
      int opt = tu::brute_path_cover(g);
      CAPTURE(seed);
      CAPTURE(n);
      CHECK(res.sol.covered() <= opt);
      CHECK(ratio_ok(opt, res.sol.covered()));
      ++checked;
    }
  }
  CHECK(checked == 70);
}

TEST_CASE("solver is deterministic on random inputs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = gen_gnp(24, 0.15, seed * 3301);
    SolveResult a = solve(g);
    SolveResult b = solve(g);
    CHECK(flat(a.sol) == flat(b.sol));
    CHECK(a.levels.size() == b.levels.size());
    check_solution(g, a);
  }
}

TEST_CASE("level bookkeeping is coherent") {
  Graph g = gen_gnp(30, 0.12, 424242);
  SolveResult res = solve(g);
  check_solution(g, res);
  REQUIRE(res.depth() >= 1);
  CHECK(res.levels.front().n == 30);
  CHECK(res.levels.back().terminal);
  for (size_t i = 0; i + 1 < res.levels.size(); ++i) {
    CHECK_FALSE(res.levels[i].terminal);
    CHECK(res.levels[i].removed_verts > 0);
    CHECK(res.levels[i + 1].n == res.levels[i].n - res.levels[i].removed_verts);
  }
  auto ops = res.total_ops();
  CHECK(ops[0] >= 0);
}
