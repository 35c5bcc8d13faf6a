#include "pathcover/phase1.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "pathcover/matching.hpp"

namespace pathcover {

namespace {

bool is_edge_comp(const HDecomp& d, int ci) {
  return ci >= 0 && d.comps[ci].kind == ComponentKind::Edge;
}

int edge_partner(const HDecomp& d, int ci, int v) {
  const std::vector<int>& vs = d.comps[ci].verts;
  return vs[0] == v ? vs[1] : vs[0];
}

// Tries to realize u0 plus the matched edges e0, e1 as a 5-path, in a fixed
// orientation order: u0 in the middle first, then u0 as an endpoint attached
// to e0, then attached to e1.
std::optional<std::array<int, 5>> merge_into_five_path(const Graph& g, int u0, Edge e0,
                                                       Edge e1) {
  const int a[2] = {e0.first, e0.second};
  const int b[2] = {e1.first, e1.second};
  for (int x : a)
    for (int y : b)
      if (g.has_edge(u0, x) && g.has_edge(u0, y))
        return std::array<int, 5>{x == a[0] ? a[1] : a[0], x, u0, y,
                                  y == b[0] ? b[1] : b[0]};
  for (int x : a) {
    if (!g.has_edge(u0, x)) continue;
    int xo = x == a[0] ? a[1] : a[0];
    for (int y : b)
      if (g.has_edge(xo, y))
        return std::array<int, 5>{u0, x, xo, y, y == b[0] ? b[1] : b[0]};
  }
  for (int y : b) {
    if (!g.has_edge(u0, y)) continue;
    int yo = y == b[0] ? b[1] : b[0];
    for (int x : a)
      if (g.has_edge(yo, x))
        return std::array<int, 5>{u0, y, yo, x, x == a[0] ? a[1] : a[0]};
  }
  return std::nullopt;
}

std::optional<TripleMove> find_triple_in(const Graph& g, const HState& h,
                                         const HDecomp& d) {
  std::vector<char> in = h.h_vertex_flags();
  for (int u0 = 0; u0 < g.n; ++u0) {
    if (in[u0]) continue;
    // u0 in the middle: neighbors in two distinct edge components
    int x = -1;
    for (int w : g.adj[u0]) {
      int cw = d.comp_of[w];
      if (!is_edge_comp(d, cw)) continue;
      if (x == -1) {
        x = w;
      } else if (cw != d.comp_of[x]) {
        TripleMove mv;
        mv.u0 = u0;
        mv.path = {edge_partner(d, d.comp_of[x], x), x, u0, w, edge_partner(d, cw, w)};
        return mv;
      }
    }
    // u0 at an end: u0-x, then x's partner reaches another edge component
    for (int xx : g.adj[u0]) {
      int cx = d.comp_of[xx];
      if (!is_edge_comp(d, cx)) continue;
      int xo = edge_partner(d, cx, xx);
      for (int y : g.adj[xo]) {
        int cy = d.comp_of[y];
        if (!is_edge_comp(d, cy) || cy == cx) continue;
        TripleMove mv;
        mv.u0 = u0;
        mv.path = {u0, xx, xo, y, edge_partner(d, cy, y)};
        return mv;
      }
    }
  }
  return std::nullopt;
}

void apply_path(HState& h, const std::array<int, 5>& p) {
  for (int j = 0; j + 1 < 5; ++j) h.h_edges.insert(make_edge(p[j], p[j + 1]));
  std::set<int> inside(p.begin(), p.end());
  for (int v : p) {
    int w = h.mate[v];
    if (w != -1) {
      assert(inside.count(w));
      h.mate[v] = -1;
    }
  }
  h.mate[p[0]] = p[1];
  h.mate[p[1]] = p[0];
  h.mate[p[3]] = p[4];
  h.mate[p[4]] = p[3];
}

}  // namespace

Graph q4_auxiliary(const Graph& g, const HState& h,
                   std::vector<std::vector<int>>* comp_verts) {
  HDecomp d = build_h_components(h);
  std::vector<int> node_of(d.comps.size(), -1);
  int nodes = 0;
  if (comp_verts) comp_verts->clear();
  for (size_t ci = 0; ci < d.comps.size(); ++ci)
    if (d.comps[ci].kind == ComponentKind::Edge) {
      node_of[ci] = nodes++;
      if (comp_verts) comp_verts->push_back(d.comps[ci].verts);
    }
  std::set<Edge> arcs;
  for (const Edge& e : g.edges) {
    int cu = d.comp_of[e.first], cv = d.comp_of[e.second];
    if (cu < 0 || cv < 0 || cu == cv) continue;
    if (node_of[cu] < 0 || node_of[cv] < 0) continue;
    arcs.insert(make_edge(node_of[cu], node_of[cv]));
  }
  return Graph::from_edges(nodes, std::vector<Edge>(arcs.begin(), arcs.end()));
}

int q4(const Graph& g, const HState& h) {
  Graph aux = q4_auxiliary(g, h);
  return matching_size(maximum_matching(aux));
}

std::optional<TripleMove> find_augmenting_triple(const Graph& g, const HState& h) {
  HDecomp d = build_h_components(h);
  return find_triple_in(g, h, d);
}

std::optional<PairMove> find_augmenting_pair(const Graph& g, const HState& h) {
  HDecomp d = build_h_components(h);
  const int q4_base = q4(g, h);
  for (const HComp& k : d.comps) {
    if (k.kind != ComponentKind::FivePath) continue;
    const std::vector<int>& v = k.path_order;
    const int v3 = v[2];
    for (const HComp& ec : d.comps) {
      if (ec.kind != ComponentKind::Edge) continue;
      const int u = ec.verts[0], w = ec.verts[1];
      bool reachable = false;
      for (int y : {v[0], v[2], v[4]})
        if (g.has_edge(u, y) || g.has_edge(w, y)) reachable = true;
      if (!reachable) continue;
      for (int i : {1, 4}) {
        Edge end_pair = make_edge(v[i - 1], v[i]);
        auto cfg = merge_into_five_path(g, v3, make_edge(u, w), end_pair);
        if (!cfg) continue;
        HState sim = h;
        sim.h_edges.erase(make_edge(v[1], v[2]));
        sim.h_edges.erase(make_edge(v[2], v[3]));
        apply_path(sim, *cfg);
        PairMove mv;
        std::copy(v.begin(), v.end(), mv.k_path.begin());
        mv.e = make_edge(u, w);
        mv.i = i;
        mv.first_path = *cfg;
        if (q4(g, sim) > q4_base) {
          mv.q4_increases = true;
          return mv;
        }
        if (auto t = find_augmenting_triple(g, sim)) {
          mv.followup = *t;
          return mv;
        }
      }
    }
  }
  return std::nullopt;
}

void apply_triple(HState& h, const TripleMove& mv) { apply_path(h, mv.path); }

void apply_pair(HState& h, const PairMove& mv) {
  const std::array<int, 5>& v = mv.k_path;
  assert(h.mate[v[2]] == -1);
  h.h_edges.erase(make_edge(v[1], v[2]));
  h.h_edges.erase(make_edge(v[2], v[3]));
  apply_path(h, mv.first_path);
  if (mv.followup) apply_path(h, mv.followup->path);
}

Phase1Result run_phase1(const Graph& g, const std::vector<int>& mate,
                        const Phase1Audit& audit) {
  Phase1Result res;
  HState h;
  h.n = g.n;
  h.mate = mate;
  h.h_edges = matching_edges(mate);

  const int cap = 4 * g.n + 16;
  while (true) {
    if (res.counters.modifications > cap)
      throw InvariantViolation("augmentation loop exceeded its modification bound");
    {
      HDecomp d = build_h_components(h);
      for (const HComp& c : d.comps)
        if (c.kind != ComponentKind::Edge && c.kind != ComponentKind::FivePath)
          throw InvariantViolation(std::string("unexpected ") + kind_name(c.kind) +
                                   " component during the augmentation loop");
      if (auto t = find_triple_in(g, h, d)) {
        apply_triple(h, *t);
        ++res.counters.triples;
        ++res.counters.modifications;
        if (audit) audit("triple", h);
        continue;
      }
    }
    if (auto p = find_augmenting_pair(g, h)) {
      apply_pair(h, *p);
      ++res.counters.pairs;
      if (p->followup) ++res.counters.pair_followups;
      ++res.counters.modifications;
      if (audit) audit("pair", h);
      continue;
    }
    break;
  }
  res.h1 = h;

  // Pair up edge components into 4-paths along a maximum auxiliary matching.
  std::vector<std::vector<int>> nodes;
  Graph aux = q4_auxiliary(g, h, &nodes);
  std::vector<int> am = maximum_matching(aux);
  for (int ni = 0; ni < aux.n; ++ni) {
    int nj = am[ni];
    if (nj <= ni) continue;
    Edge best{-1, -1};
    for (int x : nodes[ni])
      for (int y : nodes[nj])
        if (g.has_edge(x, y)) {
          Edge cand = make_edge(x, y);
          if (best.first == -1 || cand < best) best = cand;
        }
    assert(best.first != -1);
    h.h_edges.insert(best);
    ++res.counters.connect_edges;
    if (audit) audit("connect", h);
  }
  res.h2 = h;

  // Attach every outside vertex adjacent to an edge component or 4-path.
  std::vector<char> in2 = h.h_vertex_flags();
  HDecomp d2 = build_h_components(h);
  std::vector<Edge> additions;
  std::set<int> new_verts;
  for (int u = 0; u < g.n; ++u) {
    if (in2[u]) continue;
    for (int v : g.adj[u]) {
      int cv = d2.comp_of[v];
      if (cv < 0) continue;
      const HComp& c = d2.comps[cv];
      bool target = c.kind == ComponentKind::Edge ||
                    (c.kind == ComponentKind::BiStar && c.verts.size() == 4);
      if (target) {
        additions.push_back({u, v});
        new_verts.insert(u);
      }
    }
  }
  std::sort(additions.begin(), additions.end());
  for (const Edge& e : additions) {
    h.h_edges.insert(make_edge(e.first, e.second));
    ++res.counters.attach_edges;
    if (audit) audit("attach", h);
  }
  res.counters.attach_vertices = static_cast<int>(new_verts.size());

  res.h = h;
  return res;
}

}  // namespace pathcover
