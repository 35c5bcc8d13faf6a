#include "pathcover/solver.hpp"

#include <algorithm>
#include <numeric>

#include "pathcover/exact.hpp"
#include "pathcover/factor.hpp"
#include "pathcover/hstate.hpp"
#include "pathcover/local_ops.hpp"
#include "pathcover/matching.hpp"
#include "pathcover/phase1.hpp"
#include "pathcover/structure.hpp"

namespace pathcover {

namespace {

void append_mapped(Solution& acc, const Path& p, const std::vector<int>& ids) {
  Path out;
  out.verts.reserve(p.verts.size());
  for (int v : p.verts) out.verts.push_back(ids[v]);
  acc.paths.push_back(std::move(out));
}

}  // namespace

// Exact integer test of a/b > 7r/9 with r the positive root of
// 35x^2 - 52x - 90: equivalent to 45a - 26b > b*sqrt(3826).
bool trunks_suffice(long long a, long long b) {
  if (b == 0) return true;
  long long d = 45 * a - 26 * b;
  return d > 0 && d * d > 3826 * b * b;
}

std::array<int, 3> SolveResult::total_ops() const {
  std::array<int, 3> out{};
  for (const LevelStats& ls : levels) {
    for (int i = 0; i < 3; ++i) out[i] += ls.op_counts[i];
  }
  return out;
}

SolveResult solve(const Graph& g) {
  SolveResult res;
  Solution acc;
  Graph cur = g;
  std::vector<int> ids(g.n);
  std::iota(ids.begin(), ids.end(), 0);

  while (true) {
    if (cur.n <= 5) {
      if (res.levels.empty()) res.base_case = true;
      Solution small = exact_cover(cur, 5);
      for (const Path& p : small.paths) append_mapped(acc, p, ids);
      LevelStats ls;
      ls.n = cur.n;
      ls.m = cur.m();
      ls.terminal = true;
      res.levels.push_back(ls);
      break;
    }

    std::vector<int> mate = maximum_matching(cur);
    Phase1Result p1 = run_phase1(cur, mate);
    RescueGraph rg = build_rescue_graph(cur, p1.h);
    FGInstance inst = build_fg_instance(rg);
    PathCycleCover cover = prune_cover(extract_cover(max_weight_fg_factor(inst), inst), p1.h);
    LocalOpsResult ops = run_until_stable(cur, p1.h, std::move(cover));
    const StructureView& view = ops.view;

    LevelStats ls;
    ls.n = cur.n;
    ls.m = cur.m();
    ls.a_sum = view.a_sum;
    ls.b_sum = view.b_sum;
    ls.critical_comps = view.nc;
    ls.op_counts = ops.op_counts;

    if (trunks_suffice(view.a_sum, view.b_sum)) {
      for (const Component& k : view.comps) {
        for (const Path& p : k.trunk_paths) append_mapped(acc, p, ids);
      }
      ls.terminal = true;
      res.levels.push_back(ls);
      break;
    }

    // Emit one long path per critical anchor (its two satellite arms joined
    // through it), then peel those anchors and their satellites and rerun on
    // the rest.
    std::vector<char> remove(cur.n, 0);
    for (int v : view.r_critical) {
      AnchorRef ar = view.anchor_at[v];
      AnchorPaths ap = anchor_paths(view.comps[ar.comp], ar.idx);
      if (static_cast<int>(ap.p.size()) < 7) {
        throw InvariantViolation("critical anchor path shorter than seven vertices");
      }
      Path p;
      p.verts = ap.p;
      append_mapped(acc, p, ids);
      remove[v] = 1;
    }
    for (int v : view.u_critical) remove[v] = 1;

    std::vector<int> keep;
    for (int v = 0; v < cur.n; ++v) {
      if (!remove[v]) keep.push_back(v);
    }
    if (static_cast<int>(keep.size()) >= cur.n) {
      throw InvariantViolation("recursion failed to shrink the graph");
    }
    ls.removed_verts = cur.n - static_cast<int>(keep.size());
    res.levels.push_back(ls);

    std::vector<int> orig;
    cur = cur.induced(keep, &orig);
    std::vector<int> next_ids(cur.n);
    for (int i = 0; i < cur.n; ++i) next_ids[i] = ids[orig[i]];
    ids = std::move(next_ids);
  }

  ValidationResult vr = validate_solution(g, acc, 5);
  if (!vr.ok) throw InvariantViolation("solver produced an invalid cover: " + vr.message);
  res.sol = std::move(acc);
  return res;
}

}  // namespace pathcover
