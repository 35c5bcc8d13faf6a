#include "pathcover/exact.hpp"

#include <bit>
#include <unordered_map>
#include <vector>

namespace pathcover {

namespace {

struct Searcher {
  const Graph& g;
  int k;
  long long ticks;
  std::vector<uint64_t> adj_mask;
  std::unordered_map<uint64_t, int> memo;

  Searcher(const Graph& gr, int kk, long long cap) : g(gr), k(kk), ticks(cap) {
    adj_mask.assign(g.n, 0);
    for (const auto& [u, v] : g.edges) {
      adj_mask[u] |= uint64_t{1} << v;
      adj_mask[v] |= uint64_t{1} << u;
    }
  }

  void tick() {
    if (--ticks < 0) throw BudgetExceeded("exact search node budget exhausted");
  }

  int solve(uint64_t s) {
    if (std::popcount(s) < k) return 0;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    tick();
    int v = std::countr_zero(s);
    int best = solve(s & ~(uint64_t{1} << v));
    int cap = std::popcount(s);
    if (best < cap) best_paths_through(s, v, best);
    memo[s] = best;
    return best;
  }

  // Tries every path through v inside s with k..2k-1 vertices, updating best.
  // The arm vectors live on this call's stack: the recursive solve() calls
  // below re-enter the enumeration for subproblems and must not share state.
  void best_paths_through(uint64_t s, int v, int& best) {
    std::vector<int> arm_a, arm_b;
    arm_a.reserve(2 * k);
    arm_b.reserve(2 * k);
    arm_a.push_back(v);
    grow_a(s, uint64_t{1} << v, best, arm_a, arm_b);
  }

  // arm_a holds v..last; either close it and grow the second arm, or extend.
  void grow_a(uint64_t s, uint64_t used, int& best, std::vector<int>& arm_a,
              std::vector<int>& arm_b) {
    tick();
    grow_b(s, used, best, arm_a, arm_b);
    if (static_cast<int>(arm_a.size()) >= 2 * k - 1) return;
    uint64_t cand = adj_mask[arm_a.back()] & s & ~used;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      arm_a.push_back(w);
      grow_a(s, used | (uint64_t{1} << w), best, arm_a, arm_b);
      arm_a.pop_back();
    }
  }

  void grow_b(uint64_t s, uint64_t used, int& best, std::vector<int>& arm_a,
              std::vector<int>& arm_b) {
    tick();
    int total = static_cast<int>(arm_a.size() + arm_b.size());
    // Paths lying entirely in arm A reappear as pure arm-B paths; only record
    // states where arm B participates (or the path is the single vertex v).
    if (total >= k && (!arm_b.empty() || total == 1)) {
      int rest = solve(s & ~used);
      if (total + rest > best) best = total + rest;
    }
    if (total >= 2 * k - 1) return;
    int from = arm_b.empty() ? arm_a.front() : arm_b.back();
    uint64_t cand = adj_mask[from] & s & ~used;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      // arm A of length >= 2 plus arm B: avoid the mirrored duplicate
      if (arm_b.empty() && arm_a.size() >= 2 && w < arm_a[1]) continue;
      arm_b.push_back(w);
      grow_b(s, used | (uint64_t{1} << w), best, arm_a, arm_b);
      arm_b.pop_back();
    }
  }

  // Replays the computed table to extract one optimal path set.
  void reconstruct(uint64_t s, Solution& out) {
    while (s && std::popcount(s) >= k) {
      int target = solve(s);
      if (target == 0) return;
      int v = std::countr_zero(s);
      if (solve(s & ~(uint64_t{1} << v)) == target) {
        s &= ~(uint64_t{1} << v);
        continue;
      }
      Path p = find_witness_path(s, v, target);
      uint64_t pm = 0;
      for (int w : p.verts) pm |= uint64_t{1} << w;
      out.paths.push_back(std::move(p));
      s &= ~pm;
    }
  }

  Path find_witness_path(uint64_t s, int v, int target) {
    std::vector<int> arm_a, arm_b;
    arm_a.reserve(2 * k);
    arm_b.reserve(2 * k);
    arm_a.push_back(v);
    Path found;
    replay_a(s, uint64_t{1} << v, target, found, arm_a, arm_b);
    if (found.verts.empty()) throw StructureError("exact witness replay failed");
    return found;
  }

  bool replay_a(uint64_t s, uint64_t used, int target, Path& found,
                std::vector<int>& arm_a, std::vector<int>& arm_b) {
    if (replay_b(s, used, target, found, arm_a, arm_b)) return true;
    if (static_cast<int>(arm_a.size()) >= 2 * k - 1) return false;
    uint64_t cand = adj_mask[arm_a.back()] & s & ~used;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      arm_a.push_back(w);
      bool ok = replay_a(s, used | (uint64_t{1} << w), target, found, arm_a, arm_b);
      arm_a.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool replay_b(uint64_t s, uint64_t used, int target, Path& found,
                std::vector<int>& arm_a, std::vector<int>& arm_b) {
    int total = static_cast<int>(arm_a.size() + arm_b.size());
    if (total >= k && (!arm_b.empty() || total == 1) && total + solve(s & ~used) == target) {
      found.verts.assign(arm_a.rbegin(), arm_a.rend());
      found.verts.insert(found.verts.end(), arm_b.begin(), arm_b.end());
      return true;
    }
    if (total >= 2 * k - 1) return false;
    int from = arm_b.empty() ? arm_a.front() : arm_b.back();
    uint64_t cand = adj_mask[from] & s & ~used;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (arm_b.empty() && arm_a.size() >= 2 && w < arm_a[1]) continue;
      arm_b.push_back(w);
      bool ok = replay_b(s, used | (uint64_t{1} << w), target, found, arm_a, arm_b);
      arm_b.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

void check_budget(const Graph& g, const SearchBudget& budget) {
  if (g.n > budget.vertex_cap)
    throw BudgetExceeded("exact search limited to " + std::to_string(budget.vertex_cap) +
                         " vertices, got " + std::to_string(g.n));
  if (g.n > 62) throw BudgetExceeded("exact search limited to 62 vertices");
}

}  // namespace

int exact_opt(const Graph& g, int k, const SearchBudget& budget) {
  check_budget(g, budget);
  if (k < 1) throw StructureError("k must be positive");
  Searcher s(g, k, budget.node_cap);
  uint64_t all = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
  return s.solve(all);
}

Solution exact_cover(const Graph& g, int k, const SearchBudget& budget) {
  check_budget(g, budget);
  if (k < 1) throw StructureError("k must be positive");
  Searcher s(g, k, budget.node_cap);
  uint64_t all = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
  s.solve(all);
  Solution out;
  s.reconstruct(all, out);
  return out;
}

}  // namespace pathcover
