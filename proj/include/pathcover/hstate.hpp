#pragma once

#include <string>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/matching.hpp"

namespace pathcover {

class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// The five component shapes a cover-state subgraph may contain. A 3-vertex
// path counts as a star, a 4-vertex path as a bi-star.
enum class ComponentKind { Edge, Triangle, Star, BiStar, FivePath };

const char* kind_name(ComponentKind k);

struct HComp {
  ComponentKind kind{};
  std::vector<int> verts;       // sorted
  std::vector<Edge> edges;      // component edges, sorted
  std::vector<Edge> m_edges;    // matched edges inside, sorted
  std::vector<int> path_order;  // filled when the component is a path
  std::vector<int> centers;     // star: 1 entry, bi-star: 2 entries

  bool is_path(int len) const {
    return static_cast<int>(path_order.size()) == len &&
           static_cast<int>(verts.size()) == len;
  }
};

// Subgraph H plus the matching M it carries. V(H) is exactly the set of
// vertices incident to h_edges.
struct HState {
  int n = 0;
  EdgeSet h_edges;
  std::vector<int> mate;  // matching over the host graph, -1 when free

  bool in_h(int v) const;
  std::vector<char> h_vertex_flags() const;
  EdgeSet m_edges() const { return matching_edges(mate); }
};

struct HDecomp {
  std::vector<HComp> comps;
  std::vector<int> comp_of;  // per vertex, -1 when outside H

  bool bad(int ci) const { return comps[ci].kind != ComponentKind::FivePath; }
  int weight(int ci) const { return comps[ci].kind == ComponentKind::BiStar ? 2 : 1; }
};

// Classifies one connected component of H and checks the matched-edge
// placement rules for its shape. Throws InvariantViolation otherwise.
HComp classify_component(const std::vector<int>& verts, const std::vector<Edge>& edges,
                         const std::vector<int>& mate);

HDecomp build_h_components(const HState& h);

// Full state audit: matching consistency, M inside H, every component
// classifiable. With check_max_matching also certifies M is maximum in g.
std::vector<std::string> audit_h_state(const Graph& g, const HState& h,
                                       bool check_max_matching);

}  // namespace pathcover
