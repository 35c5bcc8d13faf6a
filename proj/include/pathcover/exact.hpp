#pragma once

#include <cstdint>
#include <stdexcept>

#include "pathcover/graph.hpp"

namespace pathcover {

struct SearchBudget {
  int vertex_cap = 18;
  long long node_cap = 250'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Maximum number of vertices coverable by vertex-disjoint paths with at least
// k vertices each. Exhaustive (memoized branch and bound); throws
// BudgetExceeded when the instance exceeds the budget.
int exact_opt(const Graph& g, int k = 5, const SearchBudget& budget = {});

// Same search, but also reconstructs one optimal set of paths.
Solution exact_cover(const Graph& g, int k = 5, const SearchBudget& budget = {});

}  // namespace pathcover
