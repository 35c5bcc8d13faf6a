#include "pathcover/local_ops.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pathcover {

namespace {

struct Candidate {
  bool found = false;
  int kind = 0;
  int moved_comp = -1;
  int second_comp = -1;
  Edge removed{-1, -1};
  Edge removed2{-1, -1};
  Edge added{-1, -1};
};

// Satellites anchored at 2-anchors of critical components, in component and
// satellite index order.
std::vector<std::pair<int, int>> list_critical_sats(const StructureView& view) {
  std::vector<std::pair<int, int>> out;
  for (int ki = 0; ki < static_cast<int>(view.comps.size()); ++ki) {
    const Component& k = view.comps[ki];
    if (!k.critical) continue;
    for (int si = 0; si < static_cast<int>(k.sats.size()); ++si) {
      AnchorRef ar = view.anchor_at[k.sats[si].anchor];
      if (view.comps[ar.comp].anchors[ar.idx].two_anchor()) out.emplace_back(ki, si);
    }
  }
  return out;
}

Candidate find_anchor_target(const Graph& g, const StructureView& view,
                             const std::vector<std::pair<int, int>>& crit) {
  for (const auto& [ki, si] : crit) {
    const Satellite& s1 = view.comps[ki].sats[si];
    const std::vector<int>& sverts = view.hd.comps[s1.comp].verts;
    std::vector<char> inside(g.n, 0);
    for (int v : sverts) inside[v] = 1;
    for (int v1 : sverts) {
      for (int v2 : g.adj[v1]) {
        if (inside[v2]) continue;
        AnchorRef ar = view.anchor_at[v2];
        if (!ar.valid()) continue;
        const Anchor& a = view.comps[ar.comp].anchors[ar.idx];
        bool movable = a.cls == AnchorClass::Zero || a.cls == AnchorClass::O0 ||
                       (a.cls == AnchorClass::O1 &&
                        !std::binary_search(view.responsible.begin(),
                                            view.responsible.end(), v2));
        if (!movable) continue;
        Candidate c;
        c.found = true;
        c.kind = 1;
        c.moved_comp = s1.comp;
        c.removed = s1.rescue();
        c.added = make_edge(v1, v2);
        return c;
      }
    }
  }
  return {};
}

Candidate find_satellite_target(const Graph& g, const StructureView& view,
                                const std::vector<std::pair<int, int>>& crit,
                                bool lone_sat_center_swap) {
  for (const auto& [ki, si] : crit) {
    const Satellite& s1 = view.comps[ki].sats[si];
    const std::vector<int>& sverts = view.hd.comps[s1.comp].verts;
    std::vector<char> inside(g.n, 0);
    for (int v : sverts) inside[v] = 1;
    for (int v1 : sverts) {
      for (int v2 : g.adj[v1]) {
        if (inside[v2]) continue;
        AnchorRef sr = view.sat_at[v2];
        if (!sr.valid()) continue;
        const Component& k2 = view.comps[sr.comp];
        const Satellite& s2 = k2.sats[sr.idx];
        if (s2.comp == s1.comp) continue;
        bool five_center = view.hd.comps[k2.center].kind == ComponentKind::FivePath;
        bool is_swap = !five_center && k2.sats.size() == 1;
        if (is_swap != lone_sat_center_swap) continue;
        Candidate c;
        c.found = true;
        c.kind = lone_sat_center_swap ? 2 : 3;
        c.moved_comp = s1.comp;
        c.removed = s1.rescue();
        c.added = make_edge(v1, v2);
        if (!lone_sat_center_swap) {
          c.second_comp = s2.comp;
          c.removed2 = s2.rescue();
        }
        return c;
      }
    }
  }
  return {};
}

Candidate find_candidate(const Graph& g, const StructureView& view) {
  std::vector<std::pair<int, int>> crit = list_critical_sats(view);
  if (crit.empty()) return {};
  Candidate c = find_anchor_target(g, view, crit);
  if (c.found) return c;
  c = find_satellite_target(g, view, crit, true);
  if (c.found) return c;
  return find_satellite_target(g, view, crit, false);
}

void check_path_cycle(const PathCycleCover& cover) {
  std::map<int, int> deg;
  for (const Edge& e : cover) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (const auto& [v, d] : deg) {
    if (d > 2) {
      std::ostringstream msg;
      msg << "cover degree " << d << " at vertex " << v;
      throw InvariantViolation(msg.str());
    }
  }
}

void throw_first(const std::vector<std::string>& violations, const char* where) {
  if (violations.empty()) return;
  throw InvariantViolation(std::string(where) + ": " + violations.front());
}

}  // namespace

LocalOpsResult run_until_stable(const Graph& g, const HState& h, PathCycleCover cover) {
  LocalOpsResult res;
  cover = prune_cover(cover, h);
  RescueGraph rg = build_rescue_graph(g, h);
  res.view = build_structure(g, h, cover);
  const int weight = cover_weight(cover, h);
  const std::vector<int> rescued = rescued_comps(cover, rg);
  const long long cap = 12LL * g.n + 1;

  while (true) {
    Candidate c = find_candidate(g, res.view);
    if (!c.found) break;
    if (static_cast<long long>(res.trace.size()) >= cap) {
      throw InvariantViolation("rewiring step budget exceeded");
    }
    long long g0 = res.view.potential();
    if (cover.erase(c.removed) != 1) {
      throw InvariantViolation("rewiring dropped a non-cover edge");
    }
    if (c.kind == 3 && cover.erase(c.removed2) != 1) {
      throw InvariantViolation("rewiring dropped a non-cover edge");
    }
    if (!cover.insert(c.added).second) {
      throw InvariantViolation("rewiring added a duplicate cover edge");
    }
    check_path_cycle(cover);
    StructureView next = build_structure(g, h, cover);
    long long g1 = next.potential();
    if (g1 >= g0) throw InvariantViolation("rewiring did not drop the potential");
    if (cover_weight(cover, h) != weight) {
      throw InvariantViolation("rewiring changed the rescued weight");
    }
    if (rescued_comps(cover, rg) != rescued) {
      throw InvariantViolation("rewiring changed the rescued component set");
    }
    OpRecord rec;
    rec.kind = c.kind;
    rec.moved_comp = c.moved_comp;
    rec.second_comp = c.second_comp;
    rec.removed = c.removed;
    rec.removed2 = c.removed2;
    rec.added = c.added;
    rec.g_before = g0;
    rec.g_after = g1;
    res.trace.push_back(rec);
    ++res.op_counts[c.kind - 1];
    res.view = std::move(next);
  }

  if (prune_cover(cover, h) != cover) {
    throw InvariantViolation("stable cover is not minimal");
  }
  throw_first(audit_structure(g, res.view), "stable structure");
  throw_first(audit_stable_edges(g, res.view), "stable cover");
  res.cover = std::move(cover);
  return res;
}

}  // namespace pathcover
