#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pathcover/factor.hpp"
#include "pathcover/harness.hpp"
#include "pathcover/local_ops.hpp"
#include "pathcover/matching.hpp"
#include "pathcover/phase1.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace pathcover;

namespace {

void check_monotone(const Graph& g, const LocalOpsResult& res) {
  long long prev = 0;
  bool first = true;
  for (const OpRecord& rec : res.trace) {
    CHECK(rec.g_after < rec.g_before);
    if (!first) CHECK(rec.g_before == prev);
    prev = rec.g_after;
    first = false;
  }
  CHECK(static_cast<int>(res.trace.size()) <= 12 * g.n + 1);
}

}  // namespace

TEST_CASE("stable states run zero operations") {
  // No critical component at all.
  tu::StateBuilder b(7);
  b.path({0, 1, 2, 3, 4}, {{0, 1}, {3, 4}});
  b.edge_comp(5, 6);
  b.rescue(1, 5);
  auto st = tu::finish(b);
  auto res = run_until_stable(st.g, st.h, st.cover);
  CHECK(res.trace.empty());
  CHECK(res.op_counts == std::array<int, 3>{0, 0, 0});
  CHECK(res.cover == st.cover);

  // Critical components whose satellites have no edge anywhere else.
  tu::StateBuilder b2(14);
  tu::add_critical14(b2, 0);
  auto st2 = tu::finish(b2);
  auto res2 = run_until_stable(st2.g, st2.h, st2.cover);
  CHECK(res2.trace.empty());
  CHECK(res2.view.nc == 1);

  // A responsible 1-anchor is not a legal target.
  auto st3 = tu::fixture_responsible();
  auto res3 = run_until_stable(st3.g, st3.h, st3.cover);
  CHECK(res3.trace.empty());
  CHECK(res3.view.responsible == std::vector<int>{15});

  // The aggregate fixture is likewise stable.
  auto st4 = tu::fixture_potential11();
  auto res4 = run_until_stable(st4.g, st4.h, st4.cover);
  CHECK(res4.trace.empty());
  CHECK(res4.view.potential() == -11);
}

TEST_CASE("re-anchoring onto a 0-anchor") {
  // Critical component 0..13 plus a lone 5-path 14..18; the graph edge
  // {6,16} leads from a critical satellite to a 0-anchor of the 5-path.
  tu::StateBuilder b(19);
  tu::add_critical14(b, 0);
  b.path({14, 15, 16, 17, 18}, {{14, 15}, {17, 18}});
  b.g_edge(6, 16);
  auto st = tu::finish(b);

  auto res = run_until_stable(st.g, st.h, st.cover);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.op_counts == std::array<int, 3>{1, 0, 0});
  const OpRecord& rec = res.trace[0];
  CHECK(rec.kind == 1);
  CHECK(rec.removed == Edge{1, 5});
  CHECK(rec.added == Edge{6, 16});
  CHECK(rec.g_after < rec.g_before);

  CHECK(res.cover == tu::es({{0, 12}, {1, 9}, {6, 16}}));
  CHECK(res.view.nc == 0);
  REQUIRE(res.view.comps.size() == 2);
  // The moved satellite now hangs off the 5-path's middle vertex.
  const Component& moved = res.view.comps[res.view.comp_of[16]];
  REQUIRE(moved.sats.size() == 1);
  CHECK(moved.sats[0].anchor == 16);
  CHECK(moved.sats[0].attach == 6);
  CHECK(moved.sats[0].trunk_verts == std::vector<int>{4, 5, 6, 7});
  check_monotone(st.g, res);
}

TEST_CASE("swapping into a lone satellite of a small center") {
  // Critical component 0..13; component 14..21 is a matched edge {14,15}
  // with one 4-path satellite 16..19 (a lone satellite, center not a
  // 5-path). The edge {6,18} points into that satellite.
  tu::StateBuilder b(22);
  tu::add_critical14(b, 0);
  b.edge_comp(14, 15);
  b.path({16, 17, 18, 19}, {{16, 17}, {18, 19}});
  b.rescue(14, 17);
  b.g_edge(6, 18);
  auto st = tu::finish(b);

  auto res = run_until_stable(st.g, st.h, st.cover);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.op_counts == std::array<int, 3>{0, 1, 0});
  const OpRecord& rec = res.trace[0];
  CHECK(rec.kind == 2);
  CHECK(rec.removed == Edge{1, 5});
  CHECK(rec.added == Edge{6, 18});

  CHECK(res.view.nc == 0);
  // The old lone satellite becomes the center of the enlarged component.
  const Component& grown = res.view.comps[res.view.comp_of[18]];
  CHECK(res.view.hd.comps[grown.center].verts == std::vector<int>{16, 17, 18, 19});
  REQUIRE(grown.sats.size() == 2);
  check_monotone(st.g, res);
}

TEST_CASE("merging two satellites into a fresh component") {
  // Critical component 0..13; component 14..20 is a 5-path 14..18 with a
  // lone matched-edge satellite {19,20}. The edge {6,20} points into that
  // satellite, so both rescue edges are dropped and the two satellites
  // become a component of their own.
  tu::StateBuilder b(21);
  tu::add_critical14(b, 0);
  b.path({14, 15, 16, 17, 18}, {{14, 15}, {17, 18}});
  b.edge_comp(19, 20);
  b.rescue(16, 19);
  b.g_edge(6, 20);
  auto st = tu::finish(b);

  auto res = run_until_stable(st.g, st.h, st.cover);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.op_counts == std::array<int, 3>{0, 0, 1});
  const OpRecord& rec = res.trace[0];
  CHECK(rec.kind == 3);
  CHECK(rec.removed == Edge{1, 5});
  CHECK(rec.removed2 == Edge{16, 19});
  CHECK(rec.added == Edge{6, 20});

  CHECK(res.cover == tu::es({{0, 12}, {1, 9}, {6, 20}}));
  CHECK(res.view.nc == 0);
  // The 5-path is isolated again.
  const Component& freed = res.view.comps[res.view.comp_of[14]];
  CHECK_FALSE(freed.composite());
  // The pair forms a new component with the matched edge as center.
  const Component& pair = res.view.comps[res.view.comp_of[19]];
  CHECK(pair.composite());
  CHECK(res.view.hd.comps[pair.center].verts == std::vector<int>{19, 20});
  REQUIRE(pair.sats.size() == 1);
  CHECK(pair.sats[0].trunk_verts == std::vector<int>{4, 5, 6, 7});
  check_monotone(st.g, res);
}

TEST_CASE("two rewiring steps in sequence") {
  // Two critical components, both with an outlet onto 0-anchors of one
  // lone 5-path 28..32.
  tu::StateBuilder b(33);
  tu::add_critical14(b, 0);
  tu::add_critical14(b, 14);
  b.path({28, 29, 30, 31, 32}, {{28, 29}, {31, 32}});
  b.g_edge(6, 30);
  b.g_edge(20, 31);
  auto st = tu::finish(b);

  auto res = run_until_stable(st.g, st.h, st.cover);
  REQUIRE(res.trace.size() == 2);
  CHECK(res.op_counts == std::array<int, 3>{2, 0, 0});
  CHECK(res.trace[0].removed == Edge{1, 5});
  CHECK(res.trace[0].added == Edge{6, 30});
  CHECK(res.trace[1].removed == Edge{15, 19});
  CHECK(res.trace[1].added == Edge{20, 31});
  CHECK(res.view.nc == 0);
  const Component& host = res.view.comps[res.view.comp_of[28]];
  CHECK(host.sats.size() == 2);
  check_monotone(st.g, res);
}

TEST_CASE("potential formula") {
  tu::StateBuilder b(7);
  b.path({0, 1, 2, 3, 4}, {{0, 1}, {3, 4}});
  // two isolated vertices 5, 6
  auto st = tu::finish(b);
  StructureView view = build_structure(st.g, st.h, st.cover);
  CHECK(view.n0 == 5);
  CHECK(view.nc == 0);
  CHECK(view.ncc == 3);
  CHECK(view.potential() == 5 - 18);
}

TEST_CASE("random pipelines reach a stable state under all audits") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 14 + static_cast<int>(seed % 18);
    Graph g = (seed % 3 == 0) ? gen_planted(n, 1 + static_cast<int>(seed % 3), 0.08, seed * 911)
                              : gen_gnp(n, 0.10 + 0.02 * static_cast<double>(seed % 6), seed * 911);
    auto mate = maximum_matching(g);
    auto p1 = run_phase1(g, mate);
    RescueGraph rg = build_rescue_graph(g, p1.h);
    FGInstance inst = build_fg_instance(rg);
    PathCycleCover cover = prune_cover(extract_cover(max_weight_fg_factor(inst), inst), p1.h);
    CAPTURE(seed);
    CAPTURE(n);
    // Throws if any potential/weight/shape invariant breaks along the way.
    auto res = run_until_stable(g, p1.h, cover);
    check_monotone(g, res);
    CHECK(cover_weight(res.cover, p1.h) == cover_weight(cover, p1.h));
    auto stable = audit_stable_edges(g, res.view);
    if (!stable.empty()) CAPTURE(stable.front());
    CHECK(stable.empty());
  }
}
