#pragma once

// Slow reference implementations used only to cross-check the library.

#include <optional>
#include <random>
#include <vector>

#include "unavoid/graph.hpp"
#include "unavoid/symmetry.hpp"

namespace oracle {

using unavoid::LabeledGraph;
using unavoid::Permutation;
using unavoid::VertexSet;

// Color-preserving isomorphism by plain backtracking.
bool isomorphic(const LabeledGraph& a, const std::vector<int>& ca, const LabeledGraph& b, const std::vector<int>& cb);

// Every permutation of 0..n-1 that is an automorphism of h and maps `bag`
// onto itself; n! candidates, so keep n small.
std::vector<Permutation> automorphisms_fixing(const LabeledGraph& h, const VertexSet& bag);

// Minimum over all vertex orderings of the largest prefix boundary.
int pathwidth_by_orderings(const LabeledGraph& g);

bool subgraph_by_maps(const LabeledGraph& host, const LabeledGraph& pattern);
bool induced_by_maps(const LabeledGraph& host, const LabeledGraph& pattern);
bool minor_by_branch_sets(const LabeledGraph& host, const LabeledGraph& pattern);

// Connected graphs with 1..max_order vertices, one per isomorphism class.
std::vector<LabeledGraph> connected_graphs(int max_order);

// Connected cubic graphs on n vertices with girth >= g, generated in
// breadth-first labelings; isomorphic copies may repeat.
std::vector<LabeledGraph> connected_cubic_graphs(int n, int min_girth);

// Is there a cubic graph with at most max_order vertices containing h in which
// only vertices of `bag` or new vertices receive new edges?
bool has_cubic_extension(const LabeledGraph& h, const VertexSet& bag, int max_order);

LabeledGraph random_graph(std::mt19937& rng, int n, double p);
LabeledGraph random_connected_subcubic(std::mt19937& rng, int n);
Permutation random_permutation(std::mt19937& rng, int n);
LabeledGraph relabel(const LabeledGraph& g, const Permutation& p);

}  // namespace oracle
