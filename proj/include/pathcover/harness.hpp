#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pathcover/exact.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"
#include "pathcover/solver.hpp"

namespace pathcover {

// Uniform random graph: every pair becomes an edge independently with
// probability p. Deterministic in the seed across platforms.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Vertex-disjoint planted paths of five to eight vertices over a shuffled
// vertex order, plus uniform noise edges. planted_cover receives the number
// of vertices laid down in paths: a lower bound on the optimum.
Graph gen_planted(int n, int paths, double noise, std::uint64_t seed,
                  int* planted_cover = nullptr);

struct InstanceRecord {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  std::string model;
  int alg = 0;
  int opt = -1;  // -1 when the exact reference was skipped
  int branch_depth = 0;
  std::array<int, 3> ops{};
  double ms = 0.0;
};

std::string csv_header();
std::string csv_row(const InstanceRecord& rec);

struct VerifyOptions {
  bool with_oracle = true;
  SearchBudget oracle;             // bounds which instances get an exact reference
  bool brute_cover_check = false;  // cross-check rescue weight up to 12 edges
  bool check_determinism = false;  // run the solver twice and compare
};

struct VerifyOutcome {
  InstanceRecord rec;
  std::vector<std::string> violations;
  bool trunk_only = false;  // solved in one level without peeling
};

// Runs the pipeline stepwise with every audit enabled, then the solver, and
// cross-checks against the exact reference when it is in reach. Violations
// are collected rather than thrown.
VerifyOutcome verify_instance(const Graph& g, std::uint64_t seed,
                              const std::string& model, const VerifyOptions& opt);

// Exhaustive maximum rescued weight over all degree-at-most-two subsets of
// the eligible rescue edges. Returns -1 when there are more than max_edges
// eligible edges.
int brute_cover_weight(const Graph& g, const HState& h, int max_edges = 12);

}  // namespace pathcover
