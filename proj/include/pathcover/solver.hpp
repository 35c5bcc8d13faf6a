#pragma once

#include <array>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Bookkeeping for one level of the peel-and-recurse loop.
struct LevelStats {
  int n = 0;
  int m = 0;
  bool terminal = false;  // emitted trunk paths and stopped at this level
  long long a_sum = 0;
  long long b_sum = 0;
  int critical_comps = 0;
  std::array<int, 3> op_counts{};
  int removed_verts = 0;  // vertices peeled before recursing
};

struct SolveResult {
  Solution sol;
  std::vector<LevelStats> levels;
  bool base_case = false;  // whole input handled by the tiny-instance solver

  int depth() const { return static_cast<int>(levels.size()); }
  std::array<int, 3> total_ops() const;
};

// Exact integer test deciding whether the trunk outputs alone meet the
// target factor (no recursion needed), given the marked-vertex totals.
bool trunks_suffice(long long a, long long b);

// Covers as many vertices as possible with vertex-disjoint paths of at least
// five vertices, within a factor (26+sqrt(3826))/35 (< 2.511) of optimal.
// Deterministic: equal inputs give equal outputs.
SolveResult solve(const Graph& g);

}  // namespace pathcover
