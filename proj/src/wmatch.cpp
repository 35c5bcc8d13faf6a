#include "pathcover/wmatch.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

namespace pathcover {

namespace {

// Primal-dual weighted blossom algorithm on a dense adjacency matrix.
// Vertices are 1..n; ids n+1..2n are reusable blossom slots. Each matrix
// cell remembers the concrete endpoints it stands for, so rows of contracted
// blossoms delegate to the best interior edge.
struct EdgeW {
  int u = 0, v = 0;
  long long w = 0;
};

struct WMatcher {
  int n;
  int n_x;
  std::vector<std::vector<EdgeW>> g;
  std::vector<long long> lab;
  std::vector<int> match, slack, st, pa, S, vis;
  std::vector<std::vector<int>> flower;
  std::vector<std::vector<int>> flower_from;
  std::deque<int> q;
  int visit_stamp = 0;

  explicit WMatcher(int n_) : n(n_), n_x(n_) {
    int cap = 2 * n + 1;
    g.assign(cap, std::vector<EdgeW>(cap));
    for (int u = 0; u < cap; ++u)
      for (int v = 0; v < cap; ++v) g[u][v] = EdgeW{u, v, 0};
    lab.assign(cap, 0);
    match.assign(cap, 0);
    slack.assign(cap, 0);
    st.assign(cap, 0);
    pa.assign(cap, 0);
    S.assign(cap, -1);
    vis.assign(cap, 0);
    flower.assign(cap, {});
    flower_from.assign(cap, std::vector<int>(n + 1, 0));
    for (int u = 1; u <= n; ++u) {
      st[u] = u;
      flower_from[u][u] = u;
    }
  }

  long long e_delta(const EdgeW& e) const {
    return lab[e.u] + lab[e.v] - g[e.u][e.v].w * 2;
  }

  void update_slack(int u, int x) {
    if (!slack[x] || e_delta(g[u][x]) < e_delta(g[slack[x]][x])) slack[x] = u;
  }

  void set_slack(int x) {
    slack[x] = 0;
    for (int u = 1; u <= n; ++u)
      if (g[u][x].w > 0 && st[u] != x && S[st[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n) {
      q.push_back(x);
    } else {
      for (int y : flower[x]) q_push(y);
    }
  }

  void set_st(int x, int b) {
    st[x] = b;
    if (x > n)
      for (int y : flower[x]) set_st(y, b);
  }

  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower[b].begin(), flower[b].end(), xr) -
                              flower[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower[b].begin() + 1, flower[b].end());
      return static_cast<int>(flower[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match[u] = g[u][v].v;
    if (u > n) {
      const EdgeW& e = g[u][v];
      int xr = flower_from[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i) set_match(flower[u][i], flower[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st[match[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st[pa[xnv]]);
      u = st[pa[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    ++visit_stamp;
    while (u || v) {
      if (u) {
        if (vis[u] == visit_stamp) return u;
        vis[u] = visit_stamp;
        u = st[match[u]];
        if (u) u = st[pa[u]];
      }
      std::swap(u, v);
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n + 1;
    while (b <= n_x && st[b]) ++b;
    if (b > n_x) ++n_x;
    lab[b] = 0;
    S[b] = 0;
    match[b] = match[lca];
    flower[b] = {lca};
    for (int x = u, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    std::reverse(flower[b].begin() + 1, flower[b].end());
    for (int x = v, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x; ++x) g[b][x].w = g[x][b].w = 0;
    for (int x = 1; x <= n; ++x) flower_from[b][x] = 0;
    for (int xs : flower[b]) {
      for (int x = 1; x <= n_x; ++x)
        if (g[b][x].w == 0 || e_delta(g[xs][x]) < e_delta(g[b][x])) {
          g[b][x] = g[xs][x];
          g[x][b] = g[x][xs];
        }
      for (int x = 1; x <= n; ++x)
        if (flower_from[xs][x]) flower_from[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int x : flower[b]) set_st(x, x);
    int xr = flower_from[b][g[b][pa[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower[b][i];
      int xns = flower[b][i + 1];
      pa[xs] = g[xns][xs].u;
      S[xs] = 1;
      S[xns] = 0;
      slack[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    S[xr] = 1;
    pa[xr] = pa[b];
    for (int i = pr + 1; i < static_cast<int>(flower[b].size()); ++i) {
      int xs = flower[b][i];
      S[xs] = -1;
      set_slack(xs);
    }
    st[b] = 0;
    flower[b].clear();
  }

  bool on_found_edge(const EdgeW& e) {
    int u = st[e.u], v = st[e.v];
    if (S[v] == -1) {
      pa[v] = e.u;
      S[v] = 1;
      int nu = st[match[v]];
      slack[v] = slack[nu] = 0;
      S[nu] = 0;
      q_push(nu);
    } else if (S[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching_phase() {
    std::fill(S.begin(), S.begin() + n_x + 1, -1);
    std::fill(slack.begin(), slack.begin() + n_x + 1, 0);
    q.clear();
    for (int x = 1; x <= n_x; ++x)
      if (st[x] == x && !match[x]) {
        pa[x] = 0;
        S[x] = 0;
        q_push(x);
      }
    if (q.empty()) return false;
    for (;;) {
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (S[st[u]] == 1) continue;
        for (int v = 1; v <= n; ++v)
          if (g[u][v].w > 0 && st[u] != st[v]) {
            if (e_delta(g[u][v]) == 0) {
              if (on_found_edge(g[u][v])) return true;
            } else {
              update_slack(u, st[v]);
            }
          }
      }
      long long d = std::numeric_limits<long long>::max();
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1) d = std::min(d, lab[b] / 2);
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x]) {
          if (S[x] == -1)
            d = std::min(d, e_delta(g[slack[x]][x]));
          else if (S[x] == 0)
            d = std::min(d, e_delta(g[slack[x]][x]) / 2);
        }
      for (int u = 1; u <= n; ++u) {
        if (S[st[u]] == 0) {
          if (lab[u] <= d) return false;
          lab[u] -= d;
        } else if (S[st[u]] == 1) {
          lab[u] += d;
        }
      }
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b) {
          if (S[b] == 0)
            lab[b] += d * 2;
          else if (S[b] == 1)
            lab[b] -= d * 2;
        }
      q.clear();
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x] && st[slack[x]] != x &&
            e_delta(g[slack[x]][x]) == 0)
          if (on_found_edge(g[slack[x]][x])) return true;
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1 && lab[b] == 0) expand_blossom(b);
    }
  }
};

}  // namespace

std::vector<int> max_weight_matching(int n,
                                     const std::vector<std::tuple<int, int, long long>>& edges,
                                     long long* total) {
  assert(n >= 0);
  WMatcher wm(n);
  long long w_max = 0;
  for (const auto& [eu, ev, ew] : edges) {
    assert(0 <= eu && eu < n && 0 <= ev && ev < n && eu != ev);
    assert(ew > 0);
    int a = eu + 1;
    int b = ev + 1;
    if (ew > wm.g[a][b].w) wm.g[a][b].w = wm.g[b][a].w = ew;
    w_max = std::max(w_max, ew);
  }
  for (int u = 1; u <= n; ++u) wm.lab[u] = w_max;
  while (wm.matching_phase()) {
  }
  std::vector<int> mate(n, -1);
  long long tot = 0;
  for (int u = 1; u <= n; ++u) {
    if (wm.match[u]) {
      assert(wm.match[wm.match[u]] == u);
      mate[u - 1] = wm.match[u] - 1;
      if (wm.match[u] > u) tot += wm.g[u][wm.match[u]].w;
    }
  }
  if (total) *total = tot;
  return mate;
}

}  // namespace pathcover
