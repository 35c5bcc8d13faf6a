#pragma once

#include <functional>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Maximum-cardinality matching in a general graph (blossom contraction).
// Deterministic: greedy initialization in vertex/neighbor order, then one
// augmentation attempt per free vertex in ascending order.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, std::vector<std::vector<int>> adj);

  // When set, edges {u,v} with filter(u,v) == false are invisible.
  void set_edge_filter(std::function<bool(int, int)> filter);

  std::vector<int>& mate() { return mate_; }
  const std::vector<int>& mate() const { return mate_; }

  void greedy_init();
  bool augment_from(int root);
  // Augments from every free vertex once; returns number of matched edges.
  int run();
  void unmatch(int v);
  int size() const;

 private:
  bool edge_ok(int u, int v) const;
  int lca(int a, int b);
  void mark_path(int v, int b, int child);
  int find_path(int root);

  int n_;
  std::vector<std::vector<int>> adj_;
  std::function<bool(int, int)> filter_;
  std::vector<int> mate_, p_, base_;
  std::vector<char> used_, blossom_;
  std::vector<int> lca_stamp_;
  int stamp_ = 0;
};

// mate array, -1 for unmatched vertices
std::vector<int> maximum_matching(const Graph& g);

int matching_size(const std::vector<int>& mate);
EdgeSet matching_edges(const std::vector<int>& mate);

struct MatchCertificate {
  bool maximum = true;
  std::vector<int> augmenting_path;  // alternating free-to-free walk if not maximum
};

MatchCertificate certify_maximum(const Graph& g, const std::vector<int>& mate);

}  // namespace pathcover
