#include "unavoid/named_graphs.hpp"

#include <utility>

namespace unavoid::named {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Hamiltonian cycle 1..n plus chords, all 1-based.
LabeledGraph lcf_like(int n, const EdgeList& chords) {
  LabeledGraph g = cycle_graph(n);
  for (auto [a, b] : chords) g.add_edge(a - 1, b - 1);
  return g;
}

// K_{2,3} on u=0, v=1, x1=2, x2=3, x3=4 shared by all reduction patterns.
constexpr int U = 0, V = 1, X1 = 2, X2 = 3, X3 = 4;

LabeledGraph with_k23(int n, const EdgeList& extra) {
  LabeledGraph g(n);
  for (auto [a, b] : EdgeList{{U, X1}, {X1, V}, {V, X2}, {X2, U}, {U, X3}, {X3, V}}) g.add_edge(a, b);
  for (auto [a, b] : extra) g.add_edge(a, b);
  return g;
}

}  // namespace

LabeledGraph k33() { return complete_bipartite(3, 3); }

LabeledGraph cube() { return lcf_like(8, {{1, 6}, {2, 5}, {3, 8}, {4, 7}}); }

LabeledGraph twisted_cube() { return lcf_like(8, {{1, 5}, {2, 6}, {3, 8}, {4, 7}}); }

LabeledGraph petersen() {
  LabeledGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

LabeledGraph heawood() {
  return lcf_like(14, {{14, 5}, {2, 7}, {4, 9}, {6, 11}, {8, 13}, {1, 10}, {3, 12}});
}

LabeledGraph pappus() {
  return lcf_like(18, {{1, 6}, {2, 9}, {3, 14}, {4, 11}, {5, 16}, {7, 12}, {8, 15}, {10, 17}, {13, 18}});
}

LabeledGraph mcgee() {
  return lcf_like(24, {{1, 13},
                       {7, 19},
                       {2, 9},
                       {24, 17},
                       {12, 5},
                       {8, 15},
                       {14, 21},
                       {3, 20},
                       {6, 23},
                       {11, 18},
                       {4, 16},
                       {10, 22}});
}

LabeledGraph tutte_coxeter() {
  return lcf_like(30, {{1, 10},
                       {4, 25},
                       {7, 16},
                       {13, 22},
                       {19, 28},
                       {2, 15},
                       {3, 20},
                       {8, 21},
                       {9, 26},
                       {14, 27},
                       {5, 12},
                       {6, 29},
                       {11, 18},
                       {17, 24},
                       {23, 30}});
}

LabeledGraph reduction_pattern(int index) {
  switch (index) {
    case 1: {
      constexpr int Y1 = 5, Y2 = 6, Y3 = 7, Z = 8;
      return with_k23(9, {{X1, Y1}, {X2, Y2}, {X3, Y3}, {Y1, Z}, {Z, Y2}, {Y3, Z}});
    }
    case 2: {
      constexpr int Y1 = 5, Y2 = 6, Y3 = 7;
      return with_k23(8, {{X3, Y3}, {Y3, Y2}, {Y2, X2}, {X1, Y1}});
    }
    case 3: {
      constexpr int Y1 = 5, Y2 = 6, W1 = 7, W2 = 8, W3 = 9, Z = 10;
      return with_k23(11, {{X3, Y2},
                           {Y2, X2},
                           {X1, Y1},
                           {W2, Y1},
                           {Y1, W1},
                           {Y2, W3},
                           {W1, Z},
                           {Z, W2},
                           {W3, Z}});
    }
    case 4: {
      constexpr int Y1 = 5, Y2 = 6, W1 = 7, W2 = 8, W3 = 9;
      return with_k23(10, {{X3, Y2}, {Y2, X2}, {X1, Y1}, {W2, Y1}, {Y1, W1}, {Y2, W3}, {W2, W3}});
    }
    case 5: {
      // Pendant Z hangs off W1 and pendant Z1 off Y1: a 2-edge separator.
      constexpr int Y1 = 5, Y2 = 6, W1 = 7, Z = 8, Z1 = 9;
      return with_k23(10, {{X3, Y2}, {Y2, X2}, {X1, Y1}, {Y2, W1}, {W1, Y1}, {W1, Z}, {Y1, Z1}});
    }
    case 6: {
      // Y1-W1 is a cut-edge; W1 carries two pendants.
      constexpr int Y1 = 5, Y2 = 6, W1 = 7, Z1 = 8, Z2 = 9;
      return with_k23(10, {{X1, Y1}, {Y1, Y2}, {Y2, X2}, {Y2, X3}, {Y1, W1}, {Z1, W1}, {W1, Z2}});
    }
    default:
      throw GraphError("reduction pattern index must be 1..6");
  }
}

LabeledGraph by_name(std::string_view name) {
  if (name == "k33") return k33();
  if (name == "cube") return cube();
  if (name == "twisted-cube") return twisted_cube();
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "pappus") return pappus();
  if (name == "mcgee") return mcgee();
  if (name == "tutte-coxeter") return tutte_coxeter();
  throw GraphError("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"k33", "cube", "twisted-cube", "petersen", "heawood", "pappus", "mcgee", "tutte-coxeter"};
}

}  // namespace unavoid::named
