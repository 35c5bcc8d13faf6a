#pragma once

#include <array>
#include <functional>
#include <optional>

#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"

namespace pathcover {

// A found merge of an outside vertex u0 with two matched-edge components
// into a 5-path. path holds the realized vertex order.
struct TripleMove {
  int u0 = -1;
  std::array<int, 5> path{};
};

// A found modification around a 5-path K and an edge component e: K's middle
// vertex is cut out and merged with e and one end pair of K into a new
// 5-path. Afterwards either the pairable count rises or a follow-up merge
// (necessarily using the leftover end pair) becomes available.
struct PairMove {
  std::array<int, 5> k_path{};
  Edge e{};
  int i = 0;  // 1 or 4: which end pair of K joins the new 5-path
  std::array<int, 5> first_path{};
  bool q4_increases = false;
  std::optional<TripleMove> followup;
};

// Number of disjoint 4-paths obtainable by pairing up edge components:
// maximum matching of the auxiliary graph whose nodes are edge components
// and whose edges mark component pairs joined by some graph edge.
Graph q4_auxiliary(const Graph& g, const HState& h,
                   std::vector<std::vector<int>>* comp_verts = nullptr);
int q4(const Graph& g, const HState& h);

std::optional<TripleMove> find_augmenting_triple(const Graph& g, const HState& h);
std::optional<PairMove> find_augmenting_pair(const Graph& g, const HState& h);

void apply_triple(HState& h, const TripleMove& mv);
void apply_pair(HState& h, const PairMove& mv);

struct Phase1Counters {
  int triples = 0;
  int pairs = 0;
  int pair_followups = 0;
  int connect_edges = 0;   // component pairs joined into 4-paths
  int attach_edges = 0;    // satellite edges added in the final step
  int attach_vertices = 0; // distinct outside vertices attached
  int modifications = 0;   // step 1.1 repetitions
};

struct Phase1Result {
  HState h1;  // after the augmentation loop
  HState h2;  // after pairing edge components into 4-paths
  HState h;   // final state, satellites attached
  Phase1Counters counters;
};

using Phase1Audit = std::function<void(const char* stage, const HState&)>;

// mate must be a maximum matching of g.
Phase1Result run_phase1(const Graph& g, const std::vector<int>& mate,
                        const Phase1Audit& audit = {});

}  // namespace pathcover
