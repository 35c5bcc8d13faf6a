#pragma once

#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"

namespace pathcover {

// An edge set of maximum degree two: a disjoint union of simple paths and
// cycles over the host vertices.
using PathCycleCover = EdgeSet;

// Cross-component edges available for rescuing bad (non-5-path) components,
// together with the bad-component bookkeeping extracted from H.
struct RescueGraph {
  int n = 0;
  EdgeSet eligible;                         // cross edges with a bad side
  std::vector<int> bad_comp_of;             // per vertex: bad comp index or -1
  std::vector<std::vector<int>> bad_verts;  // per bad comp, sorted
  std::vector<int> bad_weight;              // matched edges inside: 1 or 2

  int bad_count() const { return static_cast<int>(bad_verts.size()); }
};

RescueGraph build_rescue_graph(const Graph& g, const HState& h);

struct FGEdge {
  int u = 0;
  int v = 0;
  int weight = 0;
};

// Degree-constrained subgraph instance over the host vertices plus one
// triple of auxiliary vertices (x_i, y_i, z_i) per bad component. The cross
// edges carry weight zero, the scaffold edges vertex<->x_i / vertex<->y_i
// carry weight zero, and the reward edges x_i<->z_i / y_i<->z_i carry the
// component weight. A maximum-weight subgraph respecting the degree bounds
// selects a reward edge exactly when the component can be rescued, so its
// cross-edge part is a maximum-weight path-cycle cover.
struct FGInstance {
  int n_g = 0;   // host vertices occupy ids 0..n_g-1
  int comps = 0; // number of bad components
  std::vector<FGEdge> cross;    // eligible rescue edges
  std::vector<FGEdge> scaffold; // vertex<->x_i and vertex<->y_i edges
  std::vector<FGEdge> reward;   // x_i<->z_i and y_i<->z_i edges
  std::vector<int> deg_low;     // per instance vertex
  std::vector<int> deg_high;

  int x_id(int i) const { return n_g + 3 * i; }
  int y_id(int i) const { return n_g + 3 * i + 1; }
  int z_id(int i) const { return n_g + 3 * i + 2; }
  int size() const { return n_g + 3 * comps; }
};

FGInstance build_fg_instance(const RescueGraph& rg);

// Maximum-weight subgraph of the instance satisfying the degree bounds,
// returned as an edge set over instance vertex ids. Solved exactly by a
// gadget expansion to maximum-weight matching.
EdgeSet max_weight_fg_factor(const FGInstance& inst);

// The cross-edge part of a factor: the path-cycle cover over host vertices.
PathCycleCover extract_cover(const EdgeSet& factor, const FGInstance& inst);

// Indices of bad components touched by at least one cover edge.
std::vector<int> rescued_comps(const PathCycleCover& cover, const RescueGraph& rg);

// Total weight of the components rescued by `cover`, recomputed from H.
int cover_weight(const PathCycleCover& cover, const HState& h);

// Removes cover edges in ascending edge order whenever removal keeps every
// currently rescued component rescued. Single forward pass; once an edge is
// load-bearing it stays load-bearing, so the result is minimal.
PathCycleCover prune_cover(const PathCycleCover& cover, const HState& h);

struct CoverContext {
  PathCycleCover cover;
  EdgeSet m_c;  // matched edges in 5-paths and in rescued bad components
};

CoverContext compute_m_c(const PathCycleCover& cover, const HState& h);

}  // namespace pathcover
