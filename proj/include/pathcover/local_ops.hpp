#pragma once

#include <array>
#include <vector>

#include "pathcover/factor.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"
#include "pathcover/structure.hpp"

namespace pathcover {

// One applied rewiring step: which kind fired, which satellite(s) were
// re-anchored, the edges swapped, and the potential before/after.
struct OpRecord {
  int kind = 0;         // 1, 2, or 3
  int moved_comp = -1;  // H-component index of the moved satellite
  int second_comp = -1;  // kind 3 only: the satellite it pairs with
  Edge removed{-1, -1};  // rescue edge dropped
  Edge removed2{-1, -1};  // kind 3 only: second rescue edge dropped
  Edge added{-1, -1};
  long long g_before = 0;
  long long g_after = 0;
};

struct LocalOpsResult {
  PathCycleCover cover;
  StructureView view;  // structure of the final cover
  std::vector<OpRecord> trace;
  std::array<int, 3> op_counts{};
};

// Applies the three rewiring operations until none applies. Kinds are tried
// in order 1, 2, 3 and candidates scanned in a fixed lexicographic order, so
// the result is deterministic; the full structure is rebuilt after each
// step. Verifies after every step that the potential strictly drops, that
// the rescued weight and rescued component set are unchanged, and that the
// cover stays a disjoint union of paths and cycles; verifies at the end that
// pruning cannot shrink the cover and that every graph edge leaving a
// critical satellite lands on a 2-anchor or a responsible 1-anchor. Throws
// InvariantViolation when any check fails or when more than 12n+1 steps
// fire.
LocalOpsResult run_until_stable(const Graph& g, const HState& h, PathCycleCover cover);

}  // namespace pathcover
