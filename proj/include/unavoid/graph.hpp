#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unavoid/vertex_set.hpp"

namespace unavoid {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph over the label universe u1 < ... < uk < v1 < v2 < ...
//
// Vertex index i carries label u(i+1) when i < u_count(), otherwise
// v(i-u_count()+1). Index order and label order coincide, so iterating indices
// enumerates labels in universe order.
class LabeledGraph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  LabeledGraph() = default;
  explicit LabeledGraph(int order, int u_count = 0);

  int order() const { return static_cast<int>(adj_.size()); }
  int u_count() const { return u_count_; }
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  bool adjacent(int a, int b) const { return adj_[a].contains(b); }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const { return edges_; }
  int max_degree() const;

  // Throws GraphError on loops or out-of-range endpoints. Adding an existing
  // edge is a no-op.
  void add_edge(int a, int b);
  void remove_edge(int a, int b);

  // Fresh copy with one more vertex (the next v-label), isolated.
  LabeledGraph with_new_vertex() const;
  // Copy with every edge inside `s` removed.
  LabeledGraph without_edges_inside(const VertexSet& s) const;
  // Copy with every vertex of `s` isolated (kept in the index space).
  LabeledGraph isolate(const VertexSet& s) const;
  // Induced subgraph on `s`, reindexed 0..|s|-1 in increasing order; the
  // result carries no u-labels.
  LabeledGraph induced(const VertexSet& s) const;

  std::vector<std::pair<int, int>> edges() const;

  std::string label(int v) const;
  // Inverse of label(); throws GraphError on a malformed or out-of-range label.
  int index_of(std::string_view label) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.u_count_ == b.u_count_ && a.adj_ == b.adj_;
  }

 private:
  int u_count_ = 0;
  int edges_ = 0;
  std::vector<VertexSet> adj_;
};

// Minimum cycle length; std::nullopt means the graph is a forest.
using Girth = std::optional<int>;

Girth girth(const LabeledGraph& g);
// True iff g has a cycle of length at most `max_length`. Stops early.
bool has_cycle_at_most(const LabeledGraph& g, int max_length);

std::vector<VertexSet> components(const LabeledGraph& g);
bool is_forest(const LabeledGraph& g);

// Distances from `source` (−1 for unreachable).
std::vector<int> bfs_distances(const LabeledGraph& g, int source);

LabeledGraph cycle_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph complete_graph(int n);
LabeledGraph complete_bipartite(int a, int b);
LabeledGraph edgeless_graph(int n, int u_count = 0);
LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace unavoid
