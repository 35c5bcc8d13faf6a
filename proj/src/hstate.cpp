#include "pathcover/hstate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pathcover/matching.hpp"

namespace pathcover {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Edge: return "edge";
    case ComponentKind::Triangle: return "triangle";
    case ComponentKind::Star: return "star";
    case ComponentKind::BiStar: return "bi-star";
    case ComponentKind::FivePath: return "five-path";
  }
  return "?";
}

bool HState::in_h(int v) const {
  for (const Edge& e : h_edges)
    if (e.first == v || e.second == v) return true;
  return false;
}

std::vector<char> HState::h_vertex_flags() const {
  std::vector<char> in(n, 0);
  for (const Edge& e : h_edges) {
    in[e.first] = 1;
    in[e.second] = 1;
  }
  return in;
}

namespace {

std::string verts_str(const std::vector<int>& verts) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < verts.size(); ++i) os << (i ? "," : "") << verts[i];
  os << "}";
  return os.str();
}

[[noreturn]] void fail(const std::vector<int>& verts, const std::string& why) {
  throw InvariantViolation("component " + verts_str(verts) + ": " + why);
}

// Orders the vertices of a path-shaped component, starting from the smaller
// endpoint. Returns empty if the component is not a simple path.
std::vector<int> order_path(const std::vector<int>& verts, const std::vector<Edge>& edges) {
  std::map<int, std::vector<int>> nbr;
  for (const Edge& e : edges) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  if (edges.size() + 1 != verts.size()) return {};
  int start = -1;
  for (int v : verts) {
    if (nbr[v].size() > 2) return {};
    if (nbr[v].size() == 1 && start == -1) start = v;
  }
  if (start == -1) return {};  // cycle
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int nxt = -1;
    for (int w : nbr[cur])
      if (w != prev) nxt = w;
    if (nxt == -1) break;
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  if (order.size() != verts.size()) return {};
  if (order.front() > order.back()) std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

HComp classify_component(const std::vector<int>& verts, const std::vector<Edge>& edges,
                         const std::vector<int>& mate) {
  HComp c;
  c.verts = verts;
  std::sort(c.verts.begin(), c.verts.end());
  c.edges = edges;
  std::sort(c.edges.begin(), c.edges.end());
  for (const Edge& e : c.edges)
    if (mate[e.first] == e.second) c.m_edges.push_back(e);

  std::map<int, int> deg;
  for (int v : c.verts) deg[v] = 0;
  for (const Edge& e : c.edges) {
    ++deg[e.first];
    ++deg[e.second];
  }

  const size_t nv = c.verts.size(), ne = c.edges.size();
  c.path_order = order_path(c.verts, c.edges);

  if (nv == 2 && ne == 1) {
    c.kind = ComponentKind::Edge;
    if (c.m_edges.size() != 1) fail(c.verts, "edge component must be a matched edge");
    return c;
  }
  if (nv == 3 && ne == 3) {
    c.kind = ComponentKind::Triangle;
    if (c.m_edges.size() != 1) fail(c.verts, "triangle must carry exactly one matched edge");
    c.path_order.clear();
    return c;
  }
  if (nv == 5 && c.path_order.size() == 5) {
    c.kind = ComponentKind::FivePath;
    Edge lo = make_edge(c.path_order[0], c.path_order[1]);
    Edge hi = make_edge(c.path_order[3], c.path_order[4]);
    std::vector<Edge> want{lo, hi};
    std::sort(want.begin(), want.end());
    if (c.m_edges != want)
      fail(c.verts, "five-path must carry matched edges exactly at both ends");
    return c;
  }

  // Star / bi-star shapes (trees; a 3-path is a star and a 4-path a bi-star).
  std::vector<int> big;
  for (int v : c.verts)
    if (deg[v] >= 2) big.push_back(v);
  if (ne + 1 != nv) fail(c.verts, "unrecognized shape (not a tree)");

  if (nv >= 3 && big.size() == 1) {
    c.kind = ComponentKind::Star;
    c.centers = big;
    if (c.m_edges.size() != 1) fail(c.verts, "star must carry exactly one matched edge");
    return c;
  }
  if (nv >= 4 && big.size() == 2) {
    Edge cc = make_edge(big[0], big[1]);
    if (!std::binary_search(c.edges.begin(), c.edges.end(), cc))
      fail(c.verts, "two high-degree vertices are not adjacent");
    c.kind = ComponentKind::BiStar;
    c.centers = big;
    if (c.m_edges.size() != 2) fail(c.verts, "bi-star must carry exactly two matched edges");
    for (const Edge& e : c.m_edges)
      if (e == cc) fail(c.verts, "bi-star center edge must not be matched");
    return c;
  }
  fail(c.verts, "unrecognized shape");
}

HDecomp build_h_components(const HState& h) {
  HDecomp d;
  d.comp_of.assign(h.n, -1);
  std::vector<std::vector<int>> nbr(h.n);
  for (const Edge& e : h.h_edges) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  std::vector<char> seen(h.n, 0);
  for (int s = 0; s < h.n; ++s) {
    if (seen[s] || nbr[s].empty()) continue;
    std::vector<int> stack{s}, verts;
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int w : nbr[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<Edge> edges;
    for (int v : verts)
      for (int w : nbr[v])
        if (v < w) edges.push_back({v, w});
    int ci = static_cast<int>(d.comps.size());
    d.comps.push_back(classify_component(verts, edges, h.mate));
    for (int v : verts) d.comp_of[v] = ci;
  }
  return d;
}

std::vector<std::string> audit_h_state(const Graph& g, const HState& h,
                                       bool check_max_matching) {
  std::vector<std::string> issues;
  if (h.n != g.n) issues.push_back("state size differs from graph size");
  if (static_cast<int>(h.mate.size()) != g.n) {
    issues.push_back("mate array size mismatch");
    return issues;
  }
  for (int v = 0; v < g.n; ++v) {
    int w = h.mate[v];
    if (w < -1 || w >= g.n || w == v) {
      issues.push_back("mate[" + std::to_string(v) + "] out of range");
    } else if (w != -1) {
      if (h.mate[w] != v)
        issues.push_back("mate array not symmetric at " + std::to_string(v));
      if (!g.has_edge(v, w))
        issues.push_back("matched pair is not a graph edge: " + std::to_string(v) + "-" +
                         std::to_string(w));
      if (v < w && !h.h_edges.count(make_edge(v, w)))
        issues.push_back("matched edge outside the cover state: " + std::to_string(v) + "-" +
                         std::to_string(w));
    }
  }
  for (const Edge& e : h.h_edges)
    if (!g.has_edge(e.first, e.second))
      issues.push_back("cover-state edge missing from graph: " + std::to_string(e.first) +
                       "-" + std::to_string(e.second));
  try {
    build_h_components(h);
  } catch (const InvariantViolation& ex) {
    issues.push_back(ex.what());
  }
  if (check_max_matching) {
    MatchCertificate cert = certify_maximum(g, h.mate);
    if (!cert.maximum) issues.push_back("carried matching is not maximum");
  }
  return issues;
}

}  // namespace pathcover
