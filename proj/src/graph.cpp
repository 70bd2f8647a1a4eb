#include "unavoid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace unavoid {

LabeledGraph::LabeledGraph(int order, int u_count) : u_count_(u_count) {
  if (order < 0 || order > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside 0.." +
                     std::to_string(kMaxOrder));
  }
  if (u_count < 0 || u_count > order) {
    throw GraphError("u-label count exceeds graph order");
  }
  adj_.resize(static_cast<std::size_t>(order));
}

int LabeledGraph::max_degree() const {
  int d = 0;
  for (const auto& n : adj_) d = std::max(d, n.size());
  return d;
}

void LabeledGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= order() || b >= order()) {
    throw GraphError("edge endpoint out of range");
  }
  if (a == b) throw GraphError("self-loops are not allowed");
  if (adj_[a].contains(b)) return;
  adj_[a].insert(b);
  adj_[b].insert(a);
  ++edges_;
}

void LabeledGraph::remove_edge(int a, int b) {
  if (!adj_[a].contains(b)) return;
  adj_[a].erase(b);
  adj_[b].erase(a);
  --edges_;
}

LabeledGraph LabeledGraph::with_new_vertex() const {
  if (order() == kMaxOrder) throw GraphError("graph order capacity exhausted");
  LabeledGraph g = *this;
  g.adj_.emplace_back();
  return g;
}

LabeledGraph LabeledGraph::without_edges_inside(const VertexSet& s) const {
  LabeledGraph g = *this;
  int removed_ends = 0;
  for (int v : s) {
    removed_ends += (g.adj_[v] & s).size();
    g.adj_[v] -= s;
  }
  g.edges_ -= removed_ends / 2;
  return g;
}

LabeledGraph LabeledGraph::isolate(const VertexSet& s) const {
  LabeledGraph g = *this;
  for (int v : s) {
    for (int w : adj_[v]) g.remove_edge(v, w);
  }
  return g;
}

LabeledGraph LabeledGraph::induced(const VertexSet& s) const {
  std::vector<int> pos(adj_.size(), -1);
  int n = 0;
  for (int v : s) pos[v] = n++;
  LabeledGraph g(n);
  for (int v : s) {
    for (int w : adj_[v] & s) {
      if (v < w) g.add_edge(pos[v], pos[w]);
    }
  }
  return g;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int v = 0; v < order(); ++v) {
    for (int w = adj_[v].next(v); w != -1; w = adj_[v].next(w)) out.emplace_back(v, w);
  }
  return out;
}

std::string LabeledGraph::label(int v) const {
  if (v < u_count_) return "u" + std::to_string(v + 1);
  return "v" + std::to_string(v - u_count_ + 1);
}

int LabeledGraph::index_of(std::string_view label) const {
  if (label.size() < 2 || (label[0] != 'u' && label[0] != 'v')) {
    throw GraphError("malformed vertex label '" + std::string(label) + "'");
  }
  int num = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), num);
  if (ec != std::errc{} || ptr != label.data() + label.size() || num < 1) {
    throw GraphError("malformed vertex label '" + std::string(label) + "'");
  }
  int idx = label[0] == 'u' ? num - 1 : u_count_ + num - 1;
  if ((label[0] == 'u' && num > u_count_) || idx >= order()) {
    throw GraphError("vertex label '" + std::string(label) + "' not in graph");
  }
  return idx;
}

std::vector<int> bfs_distances(const LabeledGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : g.neighbours(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

// Shortest cycle through BFS from every root, abandoning roots once they can no
// longer beat `bound`.
int shortest_cycle(const LabeledGraph& g, int bound) {
  const int n = g.order();
  int best = bound;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (g.degree(root) < 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (int y : g.neighbours(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

Girth girth(const LabeledGraph& g) {
  constexpr int kNone = std::numeric_limits<int>::max();
  int c = shortest_cycle(g, kNone);
  if (c == kNone) return std::nullopt;
  return c;
}

bool has_cycle_at_most(const LabeledGraph& g, int max_length) {
  if (max_length < 3) return false;
  return shortest_cycle(g, max_length + 1) <= max_length;
}

std::vector<VertexSet> components(const LabeledGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    int s = unseen.first();
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbours(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_forest(const LabeledGraph& g) {
  return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

LabeledGraph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycles need at least 3 vertices");
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

LabeledGraph path_graph(int n) {
  LabeledGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabeledGraph complete_graph(int n) {
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

LabeledGraph complete_bipartite(int a, int b) {
  LabeledGraph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

LabeledGraph edgeless_graph(int n, int u_count) { return LabeledGraph(n, u_count); }

LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace unavoid
