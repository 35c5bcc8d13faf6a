#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathcover {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Immutable undirected simple graph over dense vertex ids 0..n-1.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;            // normalized (u < v), sorted, unique
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;

  static Graph from_edges(int n, std::vector<Edge> es);

  // Induced subgraph on `keep` (dense re-indexing). orig_of[i] maps the new
  // id i back to the original vertex id.
  Graph induced(const std::vector<int>& keep, std::vector<int>* orig_of = nullptr) const;
};

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Components of an arbitrary edge set over vertices 0..n-1. Vertices not
// touched by any edge are skipped unless listed in `include`.
std::vector<std::vector<int>> edge_set_components(int n, const EdgeSet& es,
                                                  const std::vector<int>* include = nullptr);

struct Path {
  std::vector<int> verts;
  int size() const { return static_cast<int>(verts.size()); }
};

struct Solution {
  std::vector<Path> paths;
  int covered() const;
};

struct ValidationResult {
  bool ok = true;
  std::string message;
};

// Checks that paths are simple, vertex-disjoint, contained in g, and each has
// at least min_len vertices.
ValidationResult validate_solution(const Graph& g, const Solution& sol, int min_len = 5);

// One node per entry of `comps` (a partition of some subset of the vertices);
// each cover edge becomes an arc between the two components it joins. A cover
// edge inside a single component is a structure error.
struct ContractedView {
  int num_nodes = 0;
  std::vector<int> node_of;                 // per vertex, -1 if not in any component
  std::vector<std::pair<int, int>> arcs;    // component index pairs, one per cover edge
  std::vector<Edge> arc_edges;              // the originating cover edges
};

ContractedView contract(int n, const std::vector<std::vector<int>>& comps, const EdgeSet& cover);

}  // namespace pathcover
