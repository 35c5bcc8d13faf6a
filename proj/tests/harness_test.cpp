#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "pathcover/exact.hpp"
#include "pathcover/factor.hpp"
#include "pathcover/harness.hpp"
#include "test_util.hpp"

using namespace pathcover;

namespace {

int commas(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), ','));
}

}  // namespace

TEST_CASE("random graph generator is deterministic in the seed") {
  Graph a = gen_gnp(30, 0.3, 77);
  Graph b = gen_gnp(30, 0.3, 77);
  CHECK(a.n == 30);
  CHECK(a.edges == b.edges);

  Graph c = gen_gnp(30, 0.3, 78);
  CHECK(a.edges != c.edges);
}

TEST_CASE("random graph generator respects the edge probability extremes") {
  Graph empty = gen_gnp(6, 0.0, 9);
  CHECK(empty.n == 6);
  CHECK(empty.m() == 0);

  Graph full = gen_gnp(5, 1.0, 9);
  CHECK(full.n == 5);
  CHECK(full.m() == 10);
}

TEST_CASE("planted generator reports a valid lower bound") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    int planted = -1;
    Graph g = gen_planted(16, 2, 0.0, seed, &planted);
    CHECK(g.n == 16);
    CHECK(planted >= 10);
    CHECK(planted <= 16);
    // Without noise the graph is exactly the planted disjoint paths, so the
    // optimum equals the planted cover.
    CHECK(exact_opt(g) == planted);
  }
}

TEST_CASE("planted generator with noise still lower-bounds the optimum") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    CAPTURE(seed);
    int planted = -1;
    Graph g = gen_planted(13, 2, 0.08, seed, &planted);
    CHECK(planted >= 10);
    CHECK(exact_opt(g) >= planted);
  }
}

TEST_CASE("planted generator is deterministic in the seed") {
  int p1 = -1, p2 = -1;
  Graph a = gen_planted(20, 3, 0.05, 123, &p1);
  Graph b = gen_planted(20, 3, 0.05, 123, &p2);
  CHECK(a.edges == b.edges);
  CHECK(p1 == p2);
}

TEST_CASE("csv header and rows have matching shapes") {
  CHECK(csv_header() == "seed,n,m,model,alg,opt,branch_depth,ops1,ops2,ops3,ms");

  InstanceRecord rec;
  rec.seed = 42;
  rec.n = 10;
  rec.m = 15;
  rec.model = "gnp";
  rec.alg = 8;
  rec.opt = 9;
  rec.branch_depth = 2;
  rec.ops = {1, 2, 3};
  rec.ms = 1.5;
  CHECK(csv_row(rec) == "42,10,15,gnp,8,9,2,1,2,3,1.500");
  CHECK(commas(csv_header()) == commas(csv_row(rec)));
}

TEST_CASE("exhaustive rescue weight matches a known fixture") {
  // A five-path plus two lone matched edges, chained by two rescue
  // candidates: both edges can be rescued at once.
  Graph g = tu::mk(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {7, 8}, {4, 5}, {6, 7}});
  HState h = tu::mk_h(9, {{0, 1}, {3, 4}, {5, 6}, {7, 8}}, {{1, 2}, {2, 3}});
  CHECK(brute_cover_weight(g, h) == 2);
}

TEST_CASE("exhaustive rescue weight refuses oversized instances") {
  // Seven lone matched edges with fourteen cross edges between distinct
  // components: more candidates than the exhaustive bound allows.
  std::vector<std::pair<int, int>> es;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 7; ++i) {
    es.push_back({2 * i, 2 * i + 1});
    pairs.push_back({2 * i, 2 * i + 1});
  }
  for (int i = 0; i < 6; ++i) es.push_back({2 * i + 1, 2 * i + 2});
  for (int j = 2; j <= 6; ++j) es.push_back({0, 2 * j});
  for (int j : {5, 7, 9}) es.push_back({1, j});
  Graph g = tu::mk(14, es);
  HState h = tu::mk_h(14, pairs);
  CHECK(build_rescue_graph(g, h).eligible.size() > 12);
  CHECK(brute_cover_weight(g, h) == -1);
  CHECK(brute_cover_weight(g, h, 20) >= 0);
}

TEST_CASE("instance verification passes on simple paths") {
  VerifyOptions vo;
  vo.brute_cover_check = true;
  vo.check_determinism = true;

  VerifyOutcome p9 = verify_instance(tu::path_graph(9), 1, "path", vo);
  CHECK(p9.violations.empty());
  CHECK(p9.rec.seed == 1);
  CHECK(p9.rec.n == 9);
  CHECK(p9.rec.m == 8);
  CHECK(p9.rec.model == "path");
  CHECK(p9.rec.opt == 9);
  CHECK(p9.rec.alg == 9);
  CHECK(p9.rec.branch_depth >= 1);
  CHECK(p9.rec.ms >= 0.0);

  VerifyOutcome p14 = verify_instance(tu::path_graph(14), 2, "path", vo);
  CHECK(p14.violations.empty());
  CHECK(p14.rec.opt == 14);
  CHECK(p14.rec.alg <= 14);
  CHECK(p14.rec.alg >= 6);
}

TEST_CASE("instance verification can skip the exact reference") {
  VerifyOptions vo;
  vo.with_oracle = false;
  VerifyOutcome out = verify_instance(tu::path_graph(9), 3, "path", vo);
  CHECK(out.violations.empty());
  CHECK(out.rec.opt == -1);
  CHECK(out.rec.alg == 9);
}

TEST_CASE("instance verification passes on small random graphs") {
  VerifyOptions vo;
  vo.brute_cover_check = true;
  vo.check_determinism = true;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    Graph g = gen_gnp(11, 0.3, seed * 7 + 1);
    VerifyOutcome out = verify_instance(g, seed, "gnp", vo);
    for (const std::string& v : out.violations) {
      CAPTURE(v);
      CHECK(false);
    }
    CHECK(out.rec.opt == tu::brute_path_cover(g));
    CHECK(out.rec.alg <= out.rec.opt);
    CHECK(out.rec.alg <= out.rec.n);
  }
}
