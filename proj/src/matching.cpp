#include "pathcover/matching.hpp"

#include <numeric>
#include <queue>

namespace pathcover {

BlossomMatcher::BlossomMatcher(int n, std::vector<std::vector<int>> adj)
    : n_(n),
      adj_(std::move(adj)),
      mate_(n, -1),
      p_(n, -1),
      base_(n),
      used_(n, 0),
      blossom_(n, 0),
      lca_stamp_(n, -1) {}

void BlossomMatcher::set_edge_filter(std::function<bool(int, int)> filter) {
  filter_ = std::move(filter);
}

bool BlossomMatcher::edge_ok(int u, int v) const { return !filter_ || filter_(u, v); }

void BlossomMatcher::greedy_init() {
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] != -1) continue;
    for (int to : adj_[v]) {
      if (mate_[to] == -1 && edge_ok(v, to)) {
        mate_[v] = to;
        mate_[to] = v;
        break;
      }
    }
  }
}

int BlossomMatcher::lca(int a, int b) {
  ++stamp_;
  for (;;) {
    a = base_[a];
    lca_stamp_[a] = stamp_;
    if (mate_[a] == -1) break;
    a = p_[mate_[a]];
  }
  for (;;) {
    b = base_[b];
    if (lca_stamp_[b] == stamp_) return b;
    b = p_[mate_[b]];
  }
}

void BlossomMatcher::mark_path(int v, int b, int child) {
  while (base_[v] != b) {
    blossom_[base_[v]] = 1;
    blossom_[base_[mate_[v]]] = 1;
    p_[v] = child;
    child = mate_[v];
    v = p_[mate_[v]];
  }
}

int BlossomMatcher::find_path(int root) {
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(p_.begin(), p_.end(), -1);
  std::iota(base_.begin(), base_.end(), 0);
  used_[root] = 1;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int to : adj_[v]) {
      if (!edge_ok(v, to)) continue;
      if (base_[v] == base_[to] || mate_[v] == to) continue;
      if (to == root || (mate_[to] != -1 && p_[mate_[to]] != -1)) {
        int curbase = lca(v, to);
        std::fill(blossom_.begin(), blossom_.end(), 0);
        mark_path(v, curbase, to);
        mark_path(to, curbase, v);
        for (int i = 0; i < n_; ++i) {
          if (blossom_[base_[i]]) {
            base_[i] = curbase;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        }
      } else if (p_[to] == -1) {
        p_[to] = v;
        if (mate_[to] == -1) return to;
        used_[mate_[to]] = 1;
        q.push(mate_[to]);
      }
    }
  }
  return -1;
}

bool BlossomMatcher::augment_from(int root) {
  if (mate_[root] != -1) return false;
  int v = find_path(root);
  if (v == -1) return false;
  while (v != -1) {
    int pv = p_[v], ppv = mate_[pv];
    mate_[v] = pv;
    mate_[pv] = v;
    v = ppv;
  }
  return true;
}

int BlossomMatcher::run() {
  greedy_init();
  for (int v = 0; v < n_; ++v)
    if (mate_[v] == -1) augment_from(v);
  return size();
}

void BlossomMatcher::unmatch(int v) {
  if (mate_[v] != -1) {
    mate_[mate_[v]] = -1;
    mate_[v] = -1;
  }
}

int BlossomMatcher::size() const {
  int c = 0;
  for (int v = 0; v < n_; ++v)
    if (mate_[v] > v) ++c;
  return c;
}

std::vector<int> maximum_matching(const Graph& g) {
  BlossomMatcher bm(g.n, g.adj);
  bm.run();
  return bm.mate();
}

int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<int>(v)) ++c;
  return c;
}

EdgeSet matching_edges(const std::vector<int>& mate) {
  EdgeSet out;
  for (size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<int>(v)) out.insert(make_edge(static_cast<int>(v), mate[v]));
  return out;
}

MatchCertificate certify_maximum(const Graph& g, const std::vector<int>& mate) {
  BlossomMatcher bm(g.n, g.adj);
  bm.mate() = mate;
  for (int v = 0; v < g.n; ++v) {
    if (mate[v] != -1) continue;
    if (!bm.augment_from(v)) continue;
    const auto& flipped = bm.mate();
    // The symmetric difference of the two matchings is one augmenting path;
    // walk it from this root, alternating new and old edges.
    MatchCertificate cert;
    cert.maximum = false;
    int cur = v;
    bool use_new = true;
    cert.augmenting_path.push_back(cur);
    for (;;) {
      int nxt = use_new ? flipped[cur] : mate[cur];
      if (nxt == -1) break;
      cert.augmenting_path.push_back(nxt);
      cur = nxt;
      use_new = !use_new;
    }
    return cert;
  }
  return {};
}

}  // namespace pathcover
