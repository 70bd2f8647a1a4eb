#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unavoid/graph.hpp"

namespace unavoid {

struct PathDecomposition {
  std::vector<VertexSet> bags;

  int width() const;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

enum class Validity { Valid, ValidSmooth, Invalid };

struct ValidationResult {
  Validity verdict = Validity::Invalid;
  std::string reason;  // first violated clause when Invalid

  bool ok() const { return verdict != Validity::Invalid; }
  bool smooth() const { return verdict == Validity::ValidSmooth; }
};

// Checks vertex coverage, edge coverage, contiguity, width <= k and, when all
// of these hold, smoothness (every bag has k+1 vertices and consecutive bags
// share k).
ValidationResult validate(const LabeledGraph& g, const PathDecomposition& d, int k);

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// G_i for 1-based bag index i: the subgraph of g induced on the first i bags
// minus all edges inside bag i. Vertices keep their indices from g; vertices
// outside the first i bags are isolated and excluded from `vertices`.
struct AssociatedGraph {
  VertexSet vertices;
  LabeledGraph graph;
};
AssociatedGraph associated_graph(const LabeledGraph& g, const PathDecomposition& d, int i);

// Vertex leaving bag i (1-based, i < bag count) of a smooth decomposition.
int leaving_vertex(const PathDecomposition& d, int i);

// For every non-final bag of a smooth decomposition: a vertex of degree >= 3
// in G_i leaves whenever one exists in the bag, otherwise a vertex of degree
// >= 2 whenever one exists.
bool is_hdf(const LabeledGraph& g, const PathDecomposition& d);

// Rewrites a smooth decomposition of a graph with maximum degree <= 3 into an
// hdf one of the same width, left to right. Bags before the first violation
// are untouched. Throws InvalidInput if d is not a valid smooth decomposition
// or g has a vertex of degree > 3.
PathDecomposition make_hdf(const LabeledGraph& g, const PathDecomposition& d);

struct PathwidthResult {
  int width = 0;
  PathDecomposition decomposition;  // smooth, width `width`
};

inline constexpr int kPathwidthMaxOrder = 40;

// Exact path-width via vertex separation. Throws TooLarge above
// kPathwidthMaxOrder vertices and InvalidInput on the empty graph.
PathwidthResult pathwidth_exact(const LabeledGraph& g);

// Smooth width-w decomposition from a vertex layout whose vertex separation
// is at most w.
PathDecomposition layout_to_smooth(const LabeledGraph& g, const std::vector<int>& layout, int w);

// Largest boundary over all prefixes of the layout.
int vertex_separation(const LabeledGraph& g, const std::vector<int>& layout);

// {"width": w, "bags": [["u1", "v3", ...], ...]} using g's labels.
nlohmann::json to_json(const LabeledGraph& g, const PathDecomposition& d);
PathDecomposition decomposition_from_json(const LabeledGraph& g, const nlohmann::json& j);

}  // namespace unavoid
