#include "pathcover/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace pathcover {

namespace {

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}

int mate_of(const HComp& c, int v) {
  for (const Edge& e : c.m_edges) {
    if (e.first == v) return e.second;
    if (e.second == v) return e.first;
  }
  return -1;
}

// Trunk vertices of a component acting as center: the full path order for
// paths of four or five vertices, otherwise the matched spine. For a general
// bi-star this is leaf-center-center-leaf through the two matched edges.
std::vector<int> center_trunk(const HComp& c) {
  switch (c.kind) {
    case ComponentKind::FivePath:
      return c.path_order;
    case ComponentKind::BiStar: {
      if (c.is_path(4)) return c.path_order;
      int c1 = c.centers[0];
      int c2 = c.centers[1];
      if (c1 > c2) std::swap(c1, c2);
      int l1 = mate_of(c, c1);
      int l2 = mate_of(c, c2);
      if (l1 < 0 || l2 < 0) throw StructureError("bi-star centers must be matched");
      return {l1, c1, c2, l2};
    }
    case ComponentKind::Edge:
    case ComponentKind::Triangle:
    case ComponentKind::Star: {
      if (c.m_edges.empty()) throw StructureError("component without a matched edge");
      return {c.m_edges[0].first, c.m_edges[0].second};
    }
  }
  throw StructureError("unknown component kind");
}

void extend_longest(const std::vector<std::vector<int>>& adj, std::vector<int>& cur,
                    std::vector<char>& used, std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  for (int w : adj[cur.back()]) {
    if (used[w]) continue;
    used[w] = 1;
    cur.push_back(w);
    extend_longest(adj, cur, used, best);
    cur.pop_back();
    used[w] = 0;
  }
}

// Longest simple path starting at `start` inside the edges of `c` restricted
// to `allowed`. The allowed sets have at most five vertices, so exhaustive
// search is fine; ties resolve to the first path in ascending-neighbor DFS
// order, keeping the result deterministic.
std::vector<int> longest_arm(const HComp& c, const std::vector<int>& allowed, int start) {
  std::vector<int> ids = allowed;  // sorted
  auto local = [&](int v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    return it != ids.end() && *it == v ? static_cast<int>(it - ids.begin()) : -1;
  };
  int k = static_cast<int>(ids.size());
  std::vector<std::vector<int>> adj(k);
  for (const Edge& e : c.edges) {
    int a = local(e.first);
    int b = local(e.second);
    if (a < 0 || b < 0) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  int s = local(start);
  if (s < 0) throw StructureError("arm start outside the trimmed satellite");
  std::vector<int> cur{s};
  std::vector<char> used(k, 0);
  used[s] = 1;
  std::vector<int> best{s};
  extend_longest(adj, cur, used, best);
  std::vector<int> out;
  out.reserve(best.size());
  for (int v : best) out.push_back(ids[v]);
  return out;
}

Satellite make_satellite(const HComp& sc, int comp_idx, int anchor, int attach,
                         const std::vector<int>& mate) {
  Satellite s;
  s.comp = comp_idx;
  s.anchor = anchor;
  s.attach = attach;
  if (sc.kind == ComponentKind::Edge || sc.kind == ComponentKind::Triangle) {
    s.trunk_verts = sc.verts;
  } else {
    for (int v : sc.verts) {
      if (mate[v] >= 0 || v == attach) s.trunk_verts.push_back(v);
    }
  }
  s.arm = longest_arm(sc, s.trunk_verts, attach);
  return s;
}

std::vector<Anchor> build_anchors(const std::vector<int>& center_path,
                                  const std::vector<Satellite>& sats,
                                  const HDecomp& hd) {
  std::vector<Anchor> anchors(center_path.size());
  for (std::size_t i = 0; i < center_path.size(); ++i) anchors[i].v = center_path[i];
  for (int si = 0; si < static_cast<int>(sats.size()); ++si) {
    const Satellite& s = sats[si];
    int pos = -1;
    for (std::size_t i = 0; i < center_path.size(); ++i) {
      if (center_path[i] == s.anchor) pos = static_cast<int>(i);
    }
    if (pos < 0) throw StructureError("rescue edge attaches outside the center trunk");
    anchors[pos].sats.push_back(si);
    if (hd.comps[s.comp].kind == ComponentKind::BiStar) ++anchors[pos].bistars;
    if (anchors[pos].sats.size() > 2) {
      throw StructureError("more than two satellites anchored at one vertex");
    }
  }
  for (Anchor& a : anchors) {
    switch (a.sats.size()) {
      case 0:
        a.cls = AnchorClass::Zero;
        break;
      case 1:
        a.cls = a.bistars == 1 ? AnchorClass::O1 : AnchorClass::O0;
        break;
      default:
        a.cls = a.bistars == 2   ? AnchorClass::T2
                : a.bistars == 1 ? AnchorClass::T1
                                 : AnchorClass::T0;
        break;
    }
  }
  return anchors;
}

int arm_len(const Component& k, int sat) {
  return sat < 0 ? 0 : static_cast<int>(k.sats[sat].arm.size());
}

struct CriticalSat {
  int comp;  // component index in StructureView::comps
  int sat;   // satellite index within that component
};

std::vector<CriticalSat> critical_satellites(const StructureView& view) {
  std::vector<CriticalSat> out;
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    if (!k.critical) continue;
    for (const Anchor& a : k.anchors) {
      if (!a.two_anchor()) continue;
      for (int si : a.sats) out.push_back({ki, si});
    }
  }
  return out;
}

// Rebuilds the anchors, s, eta of a copied component after its satellite
// list changed, and reports whether it is now critical.
bool simulate_critical(Component k, const HDecomp& hd, const std::vector<char>& mc_flag) {
  k.anchors = build_anchors(k.center_path, k.sats, hd);
  std::vector<int> verts;
  for (int ci : k.hcomps) {
    verts.insert(verts.end(), hd.comps[ci].verts.begin(), hd.comps[ci].verts.end());
  }
  for (const Satellite& s : k.sats) {
    const std::vector<int>& sv = hd.comps[s.comp].verts;
    verts.insert(verts.end(), sv.begin(), sv.end());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  int s = 0;
  for (int v : verts) s += mc_flag[v];
  int eta = trunk_opt(k);
  return 8 * s >= 15 * eta;
}

}  // namespace

const char* anchor_class_name(AnchorClass c) {
  switch (c) {
    case AnchorClass::Zero: return "zero";
    case AnchorClass::O0: return "O0";
    case AnchorClass::O1: return "O1";
    case AnchorClass::T0: return "T0";
    case AnchorClass::T1: return "T1";
    case AnchorClass::T2: return "T2";
  }
  return "?";
}

int trunk_opt(const Component& k, std::vector<Path>* witness) {
  int kc = static_cast<int>(k.center_path.size());
  struct Choice {
    bool take = false;
    int q = -1, left = -1, right = -1;
  };
  std::vector<int> dp(kc + 1, 0);
  std::vector<Choice> ch(kc + 1);
  for (int p = kc - 1; p >= 0; --p) {
    dp[p] = dp[p + 1];
    ch[p] = Choice{};
    for (int q = p; q < kc; ++q) {
      std::vector<int> lefts{-1};
      for (int si : k.anchors[p].sats) lefts.push_back(si);
      std::vector<int> rights{-1};
      for (int si : k.anchors[q].sats) rights.push_back(si);
      for (int l : lefts) {
        for (int r : rights) {
          if (l >= 0 && l == r) continue;  // one satellite cannot serve both ends
          int val = (q - p + 1) + arm_len(k, l) + arm_len(k, r);
          if (val < 5) continue;
          int cand = val + dp[q + 1];
          if (cand > dp[p]) {
            dp[p] = cand;
            ch[p] = Choice{true, q, l, r};
          }
        }
      }
    }
  }
  if (witness) {
    witness->clear();
    int p = 0;
    while (p < kc) {
      if (!ch[p].take) {
        ++p;
        continue;
      }
      Path path;
      if (ch[p].left >= 0) {
        const std::vector<int>& arm = k.sats[ch[p].left].arm;
        path.verts.assign(arm.rbegin(), arm.rend());
      }
      for (int i = p; i <= ch[p].q; ++i) path.verts.push_back(k.center_path[i]);
      if (ch[p].right >= 0) {
        const std::vector<int>& arm = k.sats[ch[p].right].arm;
        path.verts.insert(path.verts.end(), arm.begin(), arm.end());
      }
      witness->push_back(std::move(path));
      p = ch[p].q + 1;
    }
  }
  return dp.empty() ? 0 : dp[0];
}

AnchorPaths anchor_paths(const Component& k, int anchor_index) {
  const Anchor& a = k.anchors.at(anchor_index);
  AnchorPaths out;
  out.q.push_back(a.v);
  int best = -1;
  for (int si : a.sats) {
    if (best < 0 || arm_len(k, si) > arm_len(k, best)) best = si;
  }
  if (best >= 0) {
    const std::vector<int>& arm = k.sats[best].arm;
    out.q.insert(out.q.end(), arm.begin(), arm.end());
  }
  if (a.two_anchor()) {
    const std::vector<int>& first = k.sats[a.sats[0]].arm;
    const std::vector<int>& second = k.sats[a.sats[1]].arm;
    out.p.assign(first.rbegin(), first.rend());
    out.p.push_back(a.v);
    out.p.insert(out.p.end(), second.begin(), second.end());
  }
  return out;
}

TrunkGraph trunk_graph(const Component& k, const HDecomp& hd) {
  TrunkGraph tg;
  std::vector<int>& ids = tg.orig_of;
  ids = k.center_path;
  for (const Satellite& s : k.sats) {
    ids.insert(ids.end(), s.trunk_verts.begin(), s.trunk_verts.end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < k.center_path.size(); ++i) {
    es.push_back(make_edge(local(k.center_path[i]), local(k.center_path[i + 1])));
  }
  for (const Satellite& s : k.sats) {
    es.push_back(make_edge(local(s.anchor), local(s.attach)));
    std::vector<char> keep(hd.comps[s.comp].verts.back() + 1, 0);
    for (int v : s.trunk_verts) keep[v] = 1;
    for (const Edge& e : hd.comps[s.comp].edges) {
      if (keep[e.first] && keep[e.second]) {
        es.push_back(make_edge(local(e.first), local(e.second)));
      }
    }
  }
  tg.graph = Graph::from_edges(static_cast<int>(ids.size()), es);
  return tg;
}

StructureView build_structure(const Graph& g, const HState& h, const PathCycleCover& cover) {
  StructureView view;
  view.hd = build_h_components(h);
  view.ctx = compute_m_c(cover, h);
  const HDecomp& hd = view.hd;
  int hc = static_cast<int>(hd.comps.size());

  std::vector<char> mc_flag(g.n, 0);
  for (const Edge& e : view.ctx.m_c) {
    mc_flag[e.first] = 1;
    mc_flag[e.second] = 1;
  }

  // Map every cover edge to the pair of H-components it joins; parallel
  // edges between one pair are illegal.
  std::map<std::pair<int, int>, Edge> pair_edge;
  std::vector<std::vector<int>> cadj(hc);  // contracted adjacency
  std::vector<int> uf(hc);
  for (int i = 0; i < hc; ++i) uf[i] = i;
  for (const Edge& e : cover) {
    int ca = hd.comp_of[e.first];
    int cb = hd.comp_of[e.second];
    if (ca < 0 || cb < 0) throw StructureError("cover edge leaves the cover-state subgraph");
    if (ca == cb) throw StructureError("cover edge inside one component");
    std::pair<int, int> key = std::minmax(ca, cb);
    if (!pair_edge.emplace(key, e).second) {
      throw StructureError("parallel rescue edges between two components");
    }
    cadj[ca].push_back(cb);
    cadj[cb].push_back(ca);
    uf[find_root(uf, ca)] = find_root(uf, cb);
  }
  for (auto& row : cadj) std::sort(row.begin(), row.end());

  std::vector<int> group_of(hc, -1);
  std::vector<std::vector<int>> groups;
  for (int ci = 0; ci < hc; ++ci) {
    int r = find_root(uf, ci);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(ci);
  }

  for (const std::vector<int>& members : groups) {
    Component k;
    k.hcomps = members;  // ascending by construction
    if (members.size() == 1) {
      k.center = members[0];
    } else {
      std::vector<int> hubs;
      for (int ci : members) {
        if (cadj[ci].size() >= 2) hubs.push_back(ci);
      }
      if (hubs.size() > 1) throw StructureError("contracted component is not a star");
      if (hubs.size() == 1) {
        k.center = hubs[0];
        for (int ci : members) {
          if (ci != k.center && cadj[ci][0] != k.center) {
            throw StructureError("contracted component is not a star");
          }
        }
      } else {
        if (members.size() != 2) throw StructureError("contracted component is not a star");
        int a = members[0];
        int b = members[1];
        bool ba = hd.bad(a);
        bool bb = hd.bad(b);
        if (!ba && !bb) throw StructureError("rescue edge joins two covered components");
        int sat;
        if (ba != bb) {
          sat = ba ? a : b;
        } else {
          bool bi_a = hd.comps[a].kind == ComponentKind::BiStar;
          bool bi_b = hd.comps[b].kind == ComponentKind::BiStar;
          if (bi_a != bi_b) {
            sat = bi_a ? a : b;
          } else {
            sat = hd.comps[a].verts[0] < hd.comps[b].verts[0] ? a : b;
          }
        }
        k.center = sat == a ? b : a;
      }
      const HComp& cc = hd.comps[k.center];
      if (cc.kind == ComponentKind::Triangle) {
        throw StructureError("triangle center element");
      }
      for (int ci : members) {
        if (ci == k.center) continue;
        const HComp& sc = hd.comps[ci];
        if (!hd.bad(ci)) throw StructureError("covered component used as a satellite");
        if (sc.kind == ComponentKind::Triangle && cc.kind != ComponentKind::FivePath) {
          throw StructureError("triangle satellite without a five-path center");
        }
        if ((cc.kind == ComponentKind::Edge || cc.kind == ComponentKind::Star) &&
            sc.kind != ComponentKind::BiStar) {
          throw StructureError("edge or star center with a non-bi-star satellite");
        }
        std::pair<int, int> key = std::minmax(ci, k.center);
        auto it = pair_edge.find(key);
        if (it == pair_edge.end()) throw StructureError("satellite without a rescue edge");
        const Edge& e = it->second;
        int anchor = hd.comp_of[e.first] == k.center ? e.first : e.second;
        int attach = anchor == e.first ? e.second : e.first;
        k.sats.push_back(make_satellite(sc, ci, anchor, attach, h.mate));
      }
    }
    k.center_path = center_trunk(hd.comps[k.center]);
    k.anchors = build_anchors(k.center_path, k.sats, hd);
    for (int ci : members) {
      const std::vector<int>& cv = hd.comps[ci].verts;
      k.verts.insert(k.verts.end(), cv.begin(), cv.end());
    }
    std::sort(k.verts.begin(), k.verts.end());
    for (int v : k.verts) k.s += mc_flag[v];
    k.eta = trunk_opt(k, &k.trunk_paths);
    if (k.composite() && k.eta < 5) {
      throw InvariantViolation("composite component with trunk optimum below five");
    }
    k.critical = k.composite() && 8 * k.s >= 15 * k.eta;
    view.comps.push_back(std::move(k));
  }

  view.comp_of.assign(g.n, -1);
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    for (int v : view.comps[ki].verts) view.comp_of[v] = ki;
  }
  view.anchor_at.assign(g.n, AnchorRef{});
  view.sat_at.assign(g.n, AnchorRef{});
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    for (int ai = 0; ai < static_cast<int>(k.anchors.size()); ++ai) {
      view.anchor_at[k.anchors[ai].v] = AnchorRef{ki, ai};
    }
    for (int si = 0; si < static_cast<int>(k.sats.size()); ++si) {
      for (int v : hd.comps[k.sats[si].comp].verts) {
        view.sat_at[v] = AnchorRef{ki, si};
      }
    }
  }

  for (int v = 0; v < g.n; ++v) {
    if (hd.comp_of[v] < 0) ++view.isolated_free_verts;
  }
  view.ncc = static_cast<int>(view.comps.size()) + view.isolated_free_verts;
  for (const Component& k : view.comps) {
    view.nc += k.critical ? 1 : 0;
    for (const Anchor& a : k.anchors) {
      if (a.cls == AnchorClass::Zero) ++view.n0;
    }
  }

  std::vector<CriticalSat> crit_sats = critical_satellites(view);
  for (const CriticalSat& cs : crit_sats) {
    const Satellite& s = view.comps[cs.comp].sats[cs.sat];
    const std::vector<int>& sv = hd.comps[s.comp].verts;
    view.u_critical.insert(view.u_critical.end(), sv.begin(), sv.end());
  }
  std::sort(view.u_critical.begin(), view.u_critical.end());
  view.u_critical.erase(std::unique(view.u_critical.begin(), view.u_critical.end()),
                        view.u_critical.end());
  for (const Component& k : view.comps) {
    if (!k.critical) continue;
    for (const Anchor& a : k.anchors) {
      if (a.two_anchor()) view.r_critical.push_back(a.v);
    }
  }
  std::sort(view.r_critical.begin(), view.r_critical.end());

  // Responsibility: a 1-anchor with a lone bi-star satellite is responsible
  // when some critical satellite could be re-anchored onto it (via any graph
  // edge into that satellite) leaving the host component critical.
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    for (const Anchor& a : k.anchors) {
      if (a.cls != AnchorClass::O1) continue;
      bool resp = false;
      for (const CriticalSat& cs : crit_sats) {
        if (resp) break;
        const Satellite& moved = view.comps[cs.comp].sats[cs.sat];
        const HComp& sc = hd.comps[moved.comp];
        for (int w : sc.verts) {
          if (!g.has_edge(a.v, w)) continue;
          Component scratch = k;
          if (cs.comp == ki) {
            scratch.sats[cs.sat] = make_satellite(sc, moved.comp, a.v, w, h.mate);
          } else {
            scratch.sats.push_back(make_satellite(sc, moved.comp, a.v, w, h.mate));
          }
          if (simulate_critical(std::move(scratch), hd, mc_flag)) {
            resp = true;
            break;
          }
        }
      }
      if (resp) view.responsible.push_back(a.v);
    }
  }
  std::sort(view.responsible.begin(), view.responsible.end());

  for (const Component& k : view.comps) {
    for (const Anchor& a : k.anchors) {
      if (a.two_anchor()) view.r_verts.push_back(a.v);
    }
  }
  view.r_verts.insert(view.r_verts.end(), view.responsible.begin(), view.responsible.end());
  std::sort(view.r_verts.begin(), view.r_verts.end());
  view.r_verts.erase(std::unique(view.r_verts.begin(), view.r_verts.end()),
                     view.r_verts.end());

  std::vector<int> r_in_comp(view.comps.size(), 0);
  for (int v : view.r_verts) {
    if (view.comp_of[v] >= 0) ++r_in_comp[view.comp_of[v]];
  }
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    if (!view.in_family(k)) continue;
    view.a_sum += r_in_comp[ki];
    if (k.critical) view.b_sum += r_in_comp[ki];
  }
  return view;
}

std::vector<std::string> audit_structure(const Graph& g, const StructureView& view) {
  std::vector<std::string> out;
  auto fail = [&out](const std::string& msg) { out.push_back(msg); };
  const HDecomp& hd = view.hd;

  std::vector<int> r_in_comp(view.comps.size(), 0);
  for (int v : view.r_verts) {
    if (view.comp_of[v] >= 0) ++r_in_comp[view.comp_of[v]];
  }

  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    std::ostringstream tag;
    tag << "component " << ki;
    const HComp& cc = hd.comps[k.center];

    if (k.center_path.size() > 5) fail(tag.str() + ": center trunk longer than five");

    int trunk_size = static_cast<int>(k.center_path.size());
    for (const Satellite& s : k.sats) trunk_size += static_cast<int>(s.trunk_verts.size());
    if (trunk_size > 55) fail(tag.str() + ": trunk larger than 55 vertices");
    if (k.sats.size() > 10) fail(tag.str() + ": more than ten satellites");

    // every cover edge inside the component must be one of the rescue edges
    EdgeSet rescues;
    for (const Satellite& s : k.sats) rescues.insert(s.rescue());
    std::vector<char> in_k(g.n, 0);
    for (int v : k.verts) in_k[v] = 1;
    for (const Edge& e : view.ctx.cover) {
      if (!in_k[e.first] || !in_k[e.second]) continue;
      if (!rescues.count(e)) fail(tag.str() + ": cover edge lost by the trunk");
    }

    if (k.composite()) {
      if (cc.kind == ComponentKind::Triangle) fail(tag.str() + ": triangle center");
      if (k.s % 2 != 0) fail(tag.str() + ": odd matched-vertex count");
      if (k.eta < 5) fail(tag.str() + ": trunk optimum below five");
      for (const Satellite& s : k.sats) {
        const HComp& sc = hd.comps[s.comp];
        if (sc.kind == ComponentKind::FivePath) fail(tag.str() + ": five-path satellite");
        if (sc.kind == ComponentKind::Triangle && cc.kind != ComponentKind::FivePath) {
          fail(tag.str() + ": triangle satellite without five-path center");
        }
        if ((cc.kind == ComponentKind::Edge || cc.kind == ComponentKind::Star) &&
            sc.kind != ComponentKind::BiStar) {
          fail(tag.str() + ": edge/star center with non-bi-star satellite");
        }
      }
    }

    // entry-path length bounds per anchor class
    for (int ai = 0; ai < static_cast<int>(k.anchors.size()); ++ai) {
      const Anchor& a = k.anchors[ai];
      AnchorPaths ap = anchor_paths(k, ai);
      int q = static_cast<int>(ap.q.size());
      int p = static_cast<int>(ap.p.size());
      bool ok = true;
      switch (a.cls) {
        case AnchorClass::Zero: ok = q == 1; break;
        case AnchorClass::O0: ok = q >= 3; break;
        case AnchorClass::O1: ok = q >= 4; break;
        case AnchorClass::T0: ok = q >= 3 && p >= 5; break;
        case AnchorClass::T1: ok = q >= 4 && p >= 6; break;
        case AnchorClass::T2: ok = q >= 4 && p >= 7; break;
      }
      if (!ok) {
        std::ostringstream msg;
        msg << tag.str() << ": anchor " << a.v << " (" << anchor_class_name(a.cls)
            << ") entry paths too short (q=" << q << ", p=" << p << ")";
        fail(msg.str());
      }
    }

    // position exclusions for lighter-loaded anchors on path centers
    std::vector<int> light;  // 1-based positions of O0/T0/T1 anchors
    for (int ai = 0; ai < static_cast<int>(k.anchors.size()); ++ai) {
      AnchorClass c = k.anchors[ai].cls;
      if (c == AnchorClass::O0 || c == AnchorClass::T0 || c == AnchorClass::T1) {
        light.push_back(ai + 1);
      }
    }
    if (cc.kind == ComponentKind::Edge || cc.kind == ComponentKind::Star) {
      if (!light.empty() && k.composite()) {
        fail(tag.str() + ": edge/star center carries a non-bi-star satellite anchor");
      }
    } else if (!light.empty() && light.size() > 2) {
      fail(tag.str() + ": more than two lightly loaded anchors");
    } else if (light.size() == 2) {
      auto pr = std::make_pair(light[0], light[1]);
      bool ok = false;
      if (cc.kind == ComponentKind::BiStar) {
        ok = pr == std::make_pair(1, 2) || pr == std::make_pair(3, 4);
      } else if (cc.kind == ComponentKind::FivePath) {
        ok = pr == std::make_pair(1, 2) || pr == std::make_pair(2, 4) ||
             pr == std::make_pair(4, 5);
      }
      if (!ok) fail(tag.str() + ": lightly loaded anchors at excluded positions");
    }

    if (k.critical) {
      static const int kAllowedS[] = {14, 16, 18, 30, 32};
      if (std::find(std::begin(kAllowedS), std::end(kAllowedS), k.s) == std::end(kAllowedS)) {
        std::ostringstream msg;
        msg << tag.str() << ": critical component with s=" << k.s;
        fail(msg.str());
      }
      int crit_anchors = 0;
      for (const Anchor& a : k.anchors) {
        if (!a.two_anchor()) continue;
        ++crit_anchors;
        if (a.cls != AnchorClass::T2) {
          fail(tag.str() + ": critical 2-anchor with a non-bi-star satellite");
        }
      }
      if (crit_anchors < 1 || crit_anchors > 2) {
        fail(tag.str() + ": critical component without one or two 2-anchors");
      }
      if (r_in_comp[ki] < 1 || r_in_comp[ki] > 2) {
        fail(tag.str() + ": critical component with |R| share outside {1,2}");
      }
      for (int v : view.responsible) {
        if (view.comp_of[v] == ki) fail(tag.str() + ": component both critical and responsible");
      }
    }
    if (view.in_family(k) && r_in_comp[ki] > 5) {
      fail(tag.str() + ": more than five marked vertices");
    }
  }
  return out;
}

std::vector<std::string> audit_stable_edges(const Graph& g, const StructureView& view) {
  std::vector<std::string> out;
  std::vector<char> two_anchor(g.n, 0);
  for (const Component& k : view.comps) {
    for (const Anchor& a : k.anchors) {
      if (a.two_anchor()) two_anchor[a.v] = 1;
    }
  }
  std::vector<char> resp(g.n, 0);
  for (int v : view.responsible) resp[v] = 1;

  for (const CriticalSat& cs : critical_satellites(view)) {
    const Satellite& s = view.comps[cs.comp].sats[cs.sat];
    const HComp& sc = view.hd.comps[s.comp];
    std::vector<char> inside(g.n, 0);
    for (int v : sc.verts) inside[v] = 1;
    for (int v : sc.verts) {
      for (int w : g.adj[v]) {
        if (inside[w] || two_anchor[w] || resp[w]) continue;
        std::ostringstream msg;
        msg << "edge {" << v << "," << w << "} leaves critical satellite toward an "
            << "unprotected vertex";
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

}  // namespace pathcover
