#include "pathcover/factor.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <tuple>
#include <vector>

#include "pathcover/wmatch.hpp"

namespace pathcover {

RescueGraph build_rescue_graph(const Graph& g, const HState& h) {
  HDecomp d = build_h_components(h);
  RescueGraph rg;
  rg.n = g.n;
  rg.bad_comp_of.assign(g.n, -1);
  std::vector<int> bad_index(d.comps.size(), -1);
  for (int ci = 0; ci < static_cast<int>(d.comps.size()); ++ci) {
    if (!d.bad(ci)) continue;
    bad_index[ci] = rg.bad_count();
    rg.bad_verts.push_back(d.comps[ci].verts);
    rg.bad_weight.push_back(d.weight(ci));
    for (int v : d.comps[ci].verts) rg.bad_comp_of[v] = bad_index[ci];
  }
  for (const Edge& e : g.edges) {
    int cu = d.comp_of[e.first];
    int cv = d.comp_of[e.second];
    if (cu < 0 || cv < 0 || cu == cv) continue;
    if (bad_index[cu] >= 0 || bad_index[cv] >= 0) rg.eligible.insert(e);
  }
  return rg;
}

FGInstance build_fg_instance(const RescueGraph& rg) {
  FGInstance inst;
  inst.n_g = rg.n;
  inst.comps = rg.bad_count();
  inst.deg_low.assign(inst.size(), 0);
  inst.deg_high.assign(inst.size(), 2);
  for (const Edge& e : rg.eligible) inst.cross.push_back({e.first, e.second, 0});
  for (int i = 0; i < inst.comps; ++i) {
    int cap = static_cast<int>(rg.bad_verts[i].size());
    for (int v : rg.bad_verts[i]) {
      inst.scaffold.push_back({v, inst.x_id(i), 0});
      inst.scaffold.push_back({v, inst.y_id(i), 0});
      inst.deg_low[v] = 2;
    }
    inst.reward.push_back({inst.x_id(i), inst.z_id(i), rg.bad_weight[i]});
    inst.reward.push_back({inst.y_id(i), inst.z_id(i), rg.bad_weight[i]});
    inst.deg_high[inst.x_id(i)] = cap;
    inst.deg_high[inst.y_id(i)] = cap;
    inst.deg_high[inst.z_id(i)] = 1;
  }
  return inst;
}

// The degree-constrained instance is solved by expansion to maximum-weight
// matching. Every host vertex becomes a fixed set of copies, every cross
// edge an internal two-node gadget, and capacity slack is absorbed by
// parity nodes that can always pair up inside one clique. The expansion is
// exact: perfect matchings of the gadget correspond to feasible factors of
// equal weight, and the gadget always has a perfect matching.
EdgeSet max_weight_fg_factor(const FGInstance& inst) {
  EdgeSet factor;
  if (inst.comps == 0) {
    if (!inst.cross.empty())
      throw InvariantViolation("cross edges present without any bad component");
    return factor;
  }

  int nc = inst.comps;
  std::vector<std::vector<int>> members(nc);
  std::vector<int> comp_of(inst.n_g, -1);
  for (const FGEdge& e : inst.scaffold) {
    assert(e.u < inst.n_g && e.v >= inst.n_g);
    int off = e.v - inst.n_g;
    if (off % 3 == 0) {
      members[off / 3].push_back(e.u);
      comp_of[e.u] = off / 3;
    } else {
      assert(off % 3 == 1);
    }
  }
  std::vector<long long> theta(nc, 0);
  for (const FGEdge& e : inst.reward) theta[(e.u - inst.n_g) / 3] = e.weight;
  for (int i = 0; i < nc; ++i) {
    std::sort(members[i].begin(), members[i].end());
    assert(static_cast<int>(members[i].size()) >= 2);
    assert(inst.deg_high[inst.x_id(i)] == static_cast<int>(members[i].size()));
  }

  std::vector<int> ord;
  for (const FGEdge& e : inst.cross)
    for (int v : {e.u, e.v})
      if (comp_of[v] < 0) ord.push_back(v);
  std::sort(ord.begin(), ord.end());
  ord.erase(std::unique(ord.begin(), ord.end()), ord.end());

  // Gadget vertex layout.
  int next = 0;
  auto take = [&next](int k) {
    int r = next;
    next += k;
    return r;
  };
  std::vector<int> cap(nc), x0(nc), y0(nc), rho_x(nc), rho_y(nc), zn(nc), pin(nc);
  for (int i = 0; i < nc; ++i) {
    cap[i] = static_cast<int>(members[i].size());
    x0[i] = take(cap[i]);
    rho_x[i] = take(1);
    y0[i] = take(cap[i]);
    rho_y[i] = take(1);
    zn[i] = take(1);
    pin[i] = take(1);
  }
  std::vector<int> cx(inst.n_g, -1), cy(inst.n_g, -1);
  for (int i = 0; i < nc; ++i)
    for (int v : members[i]) {
      cx[v] = take(1);
      cy[v] = take(1);
    }
  std::vector<int> o1(inst.n_g, -1), o2(inst.n_g, -1), rho_o(inst.n_g, -1);
  for (int u : ord) {
    o1[u] = take(1);
    o2[u] = take(1);
    rho_o[u] = take(1);
  }
  [[maybe_unused]] int edge_node_base = next;
  std::vector<int> ae(inst.cross.size()), be(inst.cross.size());
  for (int k = 0; k < static_cast<int>(inst.cross.size()); ++k) {
    ae[k] = take(1);
    be[k] = take(1);
  }
  int rho0 = (ord.size() % 2 == 1) ? take(1) : -1;
  int nv = next;
  assert(nv % 2 == 0);

  // Every edge weight is shifted by more than the total available reward, so
  // greater cardinality always beats greater reward and the maximum-weight
  // matching is forced to be perfect (one always exists). Perfect matchings
  // all receive the same shift, so the argmax among them is unchanged.
  long long base = 1;
  for (const FGEdge& e : inst.reward) base += e.weight;
  std::vector<std::tuple<int, int, long long>> ge;
  auto add = [&ge, base](int a, int b, long long w) { ge.emplace_back(a, b, w + base); };
  for (int i = 0; i < nc; ++i) {
    for (int a = 0; a < cap[i]; ++a) {
      for (int b = a + 1; b < cap[i]; ++b) {
        add(x0[i] + a, x0[i] + b, 0);
        add(y0[i] + a, y0[i] + b, 0);
      }
      add(x0[i] + a, rho_x[i], 0);
      add(y0[i] + a, rho_y[i], 0);
      add(zn[i], x0[i] + a, theta[i]);
      add(zn[i], y0[i] + a, theta[i]);
    }
    for (int v : members[i])
      for (int a = 0; a < cap[i]; ++a) {
        add(cx[v], x0[i] + a, 0);
        add(cy[v], y0[i] + a, 0);
      }
    add(zn[i], pin[i], 0);
  }
  for (int u : ord) {
    add(o1[u], o2[u], 0);
    add(o1[u], rho_o[u], 0);
    add(o2[u], rho_o[u], 0);
  }
  auto copies_of = [&](int v) {
    return comp_of[v] >= 0 ? std::pair<int, int>{cx[v], cy[v]}
                           : std::pair<int, int>{o1[v], o2[v]};
  };
  for (int k = 0; k < static_cast<int>(inst.cross.size()); ++k) {
    const FGEdge& e = inst.cross[k];
    add(ae[k], be[k], 0);
    auto [ua, ub] = copies_of(e.u);
    auto [va, vb] = copies_of(e.v);
    add(ae[k], ua, 0);
    add(ae[k], ub, 0);
    add(be[k], va, 0);
    add(be[k], vb, 0);
  }
  std::vector<int> pool;
  for (int u : ord) pool.push_back(rho_o[u]);
  for (int i = 0; i < nc; ++i) {
    pool.push_back(rho_x[i]);
    pool.push_back(rho_y[i]);
    pool.push_back(pin[i]);
  }
  if (rho0 >= 0) pool.push_back(rho0);
  for (int a = 0; a < static_cast<int>(pool.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(pool.size()); ++b)
      add(pool[a], pool[b], 0);

  long long total = 0;
  std::vector<int> mate = max_weight_matching(nv, ge, &total);
  for (int v = 0; v < nv; ++v)
    if (mate[v] < 0) throw InvariantViolation("factor expansion has no perfect matching");

  // Read the factor back off the matching.
  auto in_range = [](int v, int lo, int k) { return v >= lo && v < lo + k; };
  for (int k = 0; k < static_cast<int>(inst.cross.size()); ++k)
    if (mate[ae[k]] != be[k]) {
      assert(mate[be[k]] != ae[k]);
      factor.insert(make_edge(inst.cross[k].u, inst.cross[k].v));
    }
  for (int i = 0; i < nc; ++i) {
    for (int v : members[i]) {
      if (in_range(mate[cx[v]], x0[i], cap[i])) {
        factor.insert(make_edge(v, inst.x_id(i)));
      } else {
        assert(mate[cx[v]] >= edge_node_base);
      }
      if (in_range(mate[cy[v]], y0[i], cap[i])) {
        factor.insert(make_edge(v, inst.y_id(i)));
      } else {
        assert(mate[cy[v]] >= edge_node_base);
      }
    }
    int mz = mate[zn[i]];
    if (in_range(mz, x0[i], cap[i])) {
      factor.insert(make_edge(inst.x_id(i), inst.z_id(i)));
    } else if (in_range(mz, y0[i], cap[i])) {
      factor.insert(make_edge(inst.y_id(i), inst.z_id(i)));
    } else {
      assert(mz == pin[i]);
    }
  }

  // Certify the result against the instance bounds and the matcher's value.
  std::vector<int> deg(inst.size(), 0);
  for (const Edge& e : factor) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (int v = 0; v < inst.size(); ++v)
    if (deg[v] < inst.deg_low[v] || deg[v] > inst.deg_high[v])
      throw InvariantViolation("factor violates degree bounds at vertex " +
                               std::to_string(v));
  long long reward_selected = 0;
  for (const FGEdge& e : inst.reward)
    if (factor.count(make_edge(e.u, e.v))) reward_selected += e.weight;
  if (total != reward_selected + (nv / 2) * base)
    throw InvariantViolation("factor weight disagrees with matching weight");
  return factor;
}

PathCycleCover extract_cover(const EdgeSet& factor, const FGInstance& inst) {
  PathCycleCover cover;
  for (const Edge& e : factor)
    if (e.second < inst.n_g) cover.insert(e);
  return cover;
}

std::vector<int> rescued_comps(const PathCycleCover& cover, const RescueGraph& rg) {
  std::vector<char> hit(rg.bad_count(), 0);
  for (const Edge& e : cover)
    for (int v : {e.first, e.second})
      if (rg.bad_comp_of[v] >= 0) hit[rg.bad_comp_of[v]] = 1;
  std::vector<int> out;
  for (int i = 0; i < rg.bad_count(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

namespace {

std::vector<char> hit_bad_comps(const PathCycleCover& cover, const HDecomp& d) {
  std::vector<char> hit(d.comps.size(), 0);
  for (const Edge& e : cover)
    for (int v : {e.first, e.second}) {
      int ci = d.comp_of[v];
      if (ci >= 0 && d.bad(ci)) hit[ci] = 1;
    }
  return hit;
}

}  // namespace

int cover_weight(const PathCycleCover& cover, const HState& h) {
  HDecomp d = build_h_components(h);
  std::vector<char> hit = hit_bad_comps(cover, d);
  int w = 0;
  for (int ci = 0; ci < static_cast<int>(d.comps.size()); ++ci)
    if (hit[ci]) w += d.weight(ci);
  return w;
}

PathCycleCover prune_cover(const PathCycleCover& cover, const HState& h) {
  HDecomp d = build_h_components(h);
  auto bad_comp = [&d](int v) {
    int ci = d.comp_of[v];
    return (ci >= 0 && d.bad(ci)) ? ci : -1;
  };
  std::vector<int> touch(d.comps.size(), 0);
  for (const Edge& e : cover) {
    int a = bad_comp(e.first);
    int b = bad_comp(e.second);
    if (a >= 0) ++touch[a];
    if (b >= 0 && b != a) ++touch[b];
  }
  PathCycleCover out = cover;
  for (const Edge& e : cover) {
    int a = bad_comp(e.first);
    int b = bad_comp(e.second);
    bool removable = (a < 0 || touch[a] >= 2) && (b < 0 || b == a || touch[b] >= 2);
    if (!removable) continue;
    out.erase(e);
    if (a >= 0) --touch[a];
    if (b >= 0 && b != a) --touch[b];
  }
  return out;
}

CoverContext compute_m_c(const PathCycleCover& cover, const HState& h) {
  HDecomp d = build_h_components(h);
  std::vector<char> hit = hit_bad_comps(cover, d);
  CoverContext ctx;
  ctx.cover = cover;
  for (int ci = 0; ci < static_cast<int>(d.comps.size()); ++ci) {
    bool keep = d.comps[ci].kind == ComponentKind::FivePath || hit[ci];
    if (!keep) continue;
    for (const Edge& me : d.comps[ci].m_edges) ctx.m_c.insert(me);
  }
  return ctx;
}

}  // namespace pathcover
