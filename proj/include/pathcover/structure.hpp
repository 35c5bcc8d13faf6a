#pragma once

#include <string>
#include <vector>

#include "pathcover/factor.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/hstate.hpp"

namespace pathcover {

// One rescued component hanging off a center element: which H-component it
// is, the cover edge attaching it, and the longest entry path into its
// trimmed vertex set starting at the attach point.
struct Satellite {
  int comp = -1;    // H-component index
  int anchor = -1;  // center-side endpoint of the rescue edge
  int attach = -1;  // satellite-side endpoint of the rescue edge
  std::vector<int> trunk_verts;  // trimmed satellite vertices, sorted
  std::vector<int> arm;          // longest path from attach inside trunk_verts

  Edge rescue() const { return make_edge(anchor, attach); }
};

// 1-anchors split by how many of their satellites are bi-stars (O0/O1),
// likewise 2-anchors (T0/T1/T2); Zero marks anchors with no satellite.
enum class AnchorClass { Zero, O0, O1, T0, T1, T2 };

const char* anchor_class_name(AnchorClass c);

struct Anchor {
  int v = -1;
  std::vector<int> sats;  // indices into Component::sats anchored at v
  int bistars = 0;        // how many of those satellites are bi-stars
  AnchorClass cls = AnchorClass::Zero;

  bool two_anchor() const { return sats.size() == 2; }
};

// A connected component of H plus cover edges that contains at least one
// H-component, split into a center element and its satellites, together
// with the trimmed-trunk metrics driving the branch decision.
struct Component {
  std::vector<int> hcomps;       // member H-component indices, sorted
  int center = -1;               // center element (H-component index)
  std::vector<Satellite> sats;   // sorted by member component index
  std::vector<int> center_path;  // center's trunk vertices in path order
  std::vector<Anchor> anchors;   // aligned with center_path
  std::vector<int> verts;        // all vertices of the component, sorted
  int s = 0;                     // matched vertices counted by m_c
  int eta = 0;                   // exact optimum of the trunk
  std::vector<Path> trunk_paths;  // witness achieving eta
  bool critical = false;

  bool composite() const { return hcomps.size() >= 2; }
};

// Trunk materialized as a standalone graph for cross-checking.
struct TrunkGraph {
  Graph graph;
  std::vector<int> orig_of;  // trunk vertex id -> host vertex id
};

// Back-reference from a vertex to its role inside a component.
struct AnchorRef {
  int comp = -1;
  int idx = -1;
  bool valid() const { return comp >= 0; }
};

struct StructureView {
  HDecomp hd;
  CoverContext ctx;  // the cover handed in, plus its m_c
  std::vector<Component> comps;
  std::vector<int> comp_of;          // per vertex: index into comps, or -1
  std::vector<AnchorRef> anchor_at;  // per vertex: anchor slot, if any
  std::vector<AnchorRef> sat_at;     // per vertex: satellite slot, if any
  int isolated_free_verts = 0;       // vertices outside H, each its own component

  int n0 = 0;   // 0-anchors over all components
  int nc = 0;   // critical components
  int ncc = 0;  // connected components including isolated free vertices
  long long potential() const { return n0 + 5LL * nc - 6LL * ncc; }

  std::vector<int> responsible;  // responsible 1-anchor vertices, sorted
  std::vector<int> r_verts;      // 2-anchors plus responsible 1-anchors
  std::vector<int> r_critical;   // 2-anchors of critical components
  std::vector<int> u_critical;   // vertices of critical satellites
  long long a_sum = 0;           // sum over eligible components of |R ∩ V(K)|
  long long b_sum = 0;           // same sum restricted to critical components

  // Composite components and lone 5-paths count toward a_sum/b_sum.
  bool in_family(const Component& k) const {
    return k.composite() || hd.comps[k.center].kind == ComponentKind::FivePath;
  }
};

// Decomposes H plus `cover` into components, picks centers and satellites,
// builds trunks, computes s/eta/criticality, classifies anchors, and derives
// the responsibility sets. Throws StructureError when the cover does not
// contract to isolated nodes, edges, and stars with bad satellites.
StructureView build_structure(const Graph& g, const HState& h,
                              const PathCycleCover& cover);

// Exact maximum number of trunk vertices coverable by vertex-disjoint paths
// of five or more vertices. Every satellite hangs off the center path by a
// single cut edge, so each path is a center segment optionally extended at
// both ends by satellite entry paths; the optimum is found by exhausting
// those choices. Optionally returns one optimal path set.
int trunk_opt(const Component& k, std::vector<Path>* witness = nullptr);

TrunkGraph trunk_graph(const Component& k, const HDecomp& hd);

// Longest-entry paths for one anchor: q = the anchor plus the best single
// arm (just the anchor when it has no satellite); p = arm + anchor + arm for
// 2-anchors, empty otherwise.
struct AnchorPaths {
  std::vector<int> q;
  std::vector<int> p;
};

AnchorPaths anchor_paths(const Component& k, int anchor_index);

// Read-only consistency audit of facts that must hold for any structure
// built from a pruned maximum-weight cover: component shape restrictions,
// trunk size and cover-edge preservation, entry-path length bounds,
// anchor-position exclusions, and the critical-component inventory.
// Returns human-readable violation descriptions (empty when clean).
std::vector<std::string> audit_structure(const Graph& g, const StructureView& view);

// Audit valid only once no local operation applies: every graph edge leaving
// a critical satellite must land on a 2-anchor or a responsible 1-anchor.
std::vector<std::string> audit_stable_edges(const Graph& g, const StructureView& view);

}  // namespace pathcover
