#pragma once

// Hand-built cover states exercising the component decomposition, the
// rewiring operations, and the branch decision. Each fixture fixes the
// graph, the matching, the cover-state edges, and the rescue edges
// explicitly so the expected structure is fully determined.

#include <utility>
#include <vector>

#include "pathcover/factor.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"

namespace tu {

struct StateBuilder {
  int n = 0;
  std::vector<std::pair<int, int>> g_edges;
  std::vector<std::pair<int, int>> m_pairs;
  std::vector<std::pair<int, int>> h_extra;
  std::vector<std::pair<int, int>> cover;

  explicit StateBuilder(int verts) : n(verts) {}

  // Path component of the cover state along vs; matched pairs listed in m.
  void path(const std::vector<int>& vs, const std::vector<std::pair<int, int>>& m) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
      g_edges.push_back({vs[i], vs[i + 1]});
      h_extra.push_back({vs[i], vs[i + 1]});
    }
    for (auto p : m) m_pairs.push_back(p);
  }

  void edge_comp(int a, int b) {
    g_edges.push_back({a, b});
    m_pairs.push_back({a, b});
  }

  // Star with matched pair {center, leaves[0]}.
  void star(int center, const std::vector<int>& leaves) {
    for (int l : leaves) {
      g_edges.push_back({center, l});
      h_extra.push_back({center, l});
    }
    m_pairs.push_back({center, leaves[0]});
  }

  void triangle(int a, int b, int c) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      g_edges.push_back({x, y});
      h_extra.push_back({x, y});
    }
    m_pairs.push_back({a, b});
  }

  void rescue(int anchor, int attach) {
    g_edges.push_back({anchor, attach});
    cover.push_back({anchor, attach});
  }

  void g_edge(int a, int b) { g_edges.push_back({a, b}); }

  pathcover::Graph graph() const {
    std::vector<pathcover::Edge> es;
    for (auto [a, b] : g_edges) es.push_back(pathcover::make_edge(a, b));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return pathcover::Graph::from_edges(n, std::move(es));
  }

  pathcover::HState hstate() const {
    pathcover::HState h;
    h.n = n;
    h.mate.assign(n, -1);
    for (auto [a, b] : m_pairs) {
      h.mate[a] = b;
      h.mate[b] = a;
      h.h_edges.insert(pathcover::make_edge(a, b));
    }
    for (auto [a, b] : h_extra) h.h_edges.insert(pathcover::make_edge(a, b));
    return h;
  }

  pathcover::EdgeSet cover_set() const {
    pathcover::EdgeSet out;
    for (auto [a, b] : cover) out.insert(pathcover::make_edge(a, b));
    return out;
  }
};

struct TestState {
  pathcover::Graph g;
  pathcover::HState h;
  pathcover::EdgeSet cover;
};

inline TestState finish(const StateBuilder& b) {
  return {b.graph(), b.hstate(), b.cover_set()};
}

// Critical component with 14 counted vertices and trunk optimum 7, occupying
// off..off+13. Center 4-path off..off+3; two 4-path satellites anchored at
// off+1 (a 2-anchor), one matched-edge satellite anchored at off.
// Anchor classes along the center: O0, T2, Zero, Zero.
inline void add_critical14(StateBuilder& b, int off) {
  b.path({off + 0, off + 1, off + 2, off + 3}, {{off + 0, off + 1}, {off + 2, off + 3}});
  b.path({off + 4, off + 5, off + 6, off + 7}, {{off + 4, off + 5}, {off + 6, off + 7}});
  b.path({off + 8, off + 9, off + 10, off + 11}, {{off + 8, off + 9}, {off + 10, off + 11}});
  b.edge_comp(off + 12, off + 13);
  b.rescue(off + 1, off + 5);
  b.rescue(off + 1, off + 9);
  b.rescue(off + 0, off + 12);
}

// Critical component with 30 counted vertices and trunk optimum 16 (the
// inclusive criticality boundary: 8*30 == 15*16), occupying off..off+30.
// Center 5-path; 2-anchors at positions two and four, two lone 4-path
// satellites, one matched-edge satellite.
// Anchor classes along the center: O1, T2, O1, T2, O0.
inline void add_critical30(StateBuilder& b, int off) {
  b.path({off + 0, off + 1, off + 2, off + 3, off + 4},
         {{off + 0, off + 1}, {off + 3, off + 4}});
  int sat = off + 5;
  for (int anchor : {off + 1, off + 1, off + 3, off + 3, off + 0, off + 2}) {
    b.path({sat, sat + 1, sat + 2, sat + 3}, {{sat, sat + 1}, {sat + 2, sat + 3}});
    b.rescue(anchor, sat + 1);
    sat += 4;
  }
  b.edge_comp(off + 29, off + 30);
  b.rescue(off + 4, off + 29);
}

// Non-critical composite with exactly one 0-anchor, occupying off..off+13.
// Center 4-path with 4-path satellites at positions one and two and a
// matched-edge satellite at position three.
// Anchor classes along the center: O1, O1, O0, Zero.
inline void add_noncrit14(StateBuilder& b, int off) {
  b.path({off + 0, off + 1, off + 2, off + 3}, {{off + 0, off + 1}, {off + 2, off + 3}});
  b.path({off + 4, off + 5, off + 6, off + 7}, {{off + 4, off + 5}, {off + 6, off + 7}});
  b.path({off + 8, off + 9, off + 10, off + 11}, {{off + 8, off + 9}, {off + 10, off + 11}});
  b.edge_comp(off + 12, off + 13);
  b.rescue(off + 0, off + 5);
  b.rescue(off + 1, off + 9);
  b.rescue(off + 2, off + 12);
}

// One critical component (0..13) plus a non-critical neighbour (14..25)
// whose 1-anchor at 15 is responsible: moving the critical satellite
// {4,5,6,7} onto 15 along the graph edge {6,15} would make 14..25 critical.
inline TestState fixture_responsible() {
  StateBuilder b(26);
  add_critical14(b, 0);
  b.path({14, 15, 16, 17}, {{14, 15}, {16, 17}});
  b.path({18, 19, 20, 21}, {{18, 19}, {20, 21}});
  b.path({22, 23, 24, 25}, {{22, 23}, {24, 25}});
  b.rescue(14, 19);
  b.rescue(15, 23);
  b.g_edge(6, 15);
  return finish(b);
}

// Aggregate state with n0=3, nc=2, ncc=4 and potential -11: the boundary
// critical component, the small critical component, the one-0-anchor
// non-critical component, and one vertex outside the cover state.
inline TestState fixture_potential11() {
  StateBuilder b(60);
  add_critical30(b, 0);
  add_critical14(b, 31);
  add_noncrit14(b, 45);
  return finish(b);
}

}  // namespace tu
