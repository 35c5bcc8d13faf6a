#pragma once

#include <tuple>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Maximum-weight matching in a general graph (primal-dual with blossoms,
// dense O(n^3)). Edge weights must be positive; absent pairs are treated as
// non-edges. With all weights positive, a maximum-weight matching is also
// maximum-cardinality, so if the graph has a perfect matching the result is
// perfect. Returns the mate array (-1 for unmatched) and, via total, the
// matched weight.
std::vector<int> max_weight_matching(int n,
                                     const std::vector<std::tuple<int, int, long long>>& edges,
                                     long long* total = nullptr);

}  // namespace pathcover
