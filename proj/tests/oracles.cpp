#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace oracle {

namespace {

bool iso_extend(const LabeledGraph& a, const std::vector<int>& ca, const LabeledGraph& b, const std::vector<int>& cb,
                std::vector<int>& map, std::vector<char>& used, int v) {
  const int n = a.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || ca[v] != cb[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int x = 0; x < v && ok; ++x) ok = a.adjacent(v, x) == b.adjacent(w, map[x]);
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (iso_extend(a, ca, b, cb, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const LabeledGraph& a, const std::vector<int>& ca, const LabeledGraph& b, const std::vector<int>& cb) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(a.order()), 0);
  return iso_extend(a, ca, b, cb, map, used, 0);
}

std::vector<Permutation> automorphisms_fixing(const LabeledGraph& h, const VertexSet& bag) {
  std::vector<Permutation> out;
  Permutation p(static_cast<std::size_t>(h.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < h.order() && ok; ++v) ok = bag.contains(v) == bag.contains(p[v]);
    for (auto [a, b] : h.edges()) {
      if (!ok) break;
      ok = h.adjacent(p[a], p[b]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int pathwidth_by_orderings(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    int worst = 0;
    for (int i = 0; i < n; ++i) {
      int boundary = 0;
      for (int j = 0; j <= i; ++j) {
        for (int t = i + 1; t < n; ++t) {
          if (g.adjacent(order[j], order[t])) {
            ++boundary;
            break;
          }
        }
      }
      worst = std::max(worst, boundary);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

bool maps_extend(const LabeledGraph& host, const LabeledGraph& pattern, bool induced, std::vector<int>& map,
                 std::vector<char>& used, int v) {
  if (v == pattern.order()) {
    for (int a = 0; a < pattern.order(); ++a) {
      for (int b = a + 1; b < pattern.order(); ++b) {
        bool pe = pattern.adjacent(a, b), he = host.adjacent(map[a], map[b]);
        if (pe && !he) return false;
        if (induced && !pe && he) return false;
      }
    }
    return true;
  }
  for (int w = 0; w < host.order(); ++w) {
    if (used[w]) continue;
    map[v] = w;
    used[w] = 1;
    bool hit = maps_extend(host, pattern, induced, map, used, v + 1);
    used[w] = 0;
    if (hit) return true;
  }
  return false;
}

bool by_maps(const LabeledGraph& host, const LabeledGraph& pattern, bool induced) {
  if (pattern.order() > host.order()) return false;
  std::vector<int> map(static_cast<std::size_t>(pattern.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  return maps_extend(host, pattern, induced, map, used, 0);
}

bool connected_within(const LabeledGraph& g, const VertexSet& s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v) & s;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace

bool subgraph_by_maps(const LabeledGraph& host, const LabeledGraph& pattern) { return by_maps(host, pattern, false); }

bool induced_by_maps(const LabeledGraph& host, const LabeledGraph& pattern) { return by_maps(host, pattern, true); }

bool minor_by_branch_sets(const LabeledGraph& host, const LabeledGraph& pattern) {
  const int n = host.order(), p = pattern.order();
  if (p > n) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);  // 0 = unused, i+1 = branch set i
  for (;;) {
    std::vector<VertexSet> sets(static_cast<std::size_t>(p));
    for (int v = 0; v < n; ++v) {
      if (assign[v]) sets[assign[v] - 1].insert(v);
    }
    bool ok = true;
    for (int i = 0; i < p && ok; ++i) ok = connected_within(host, sets[i]);
    for (auto [a, b] : pattern.edges()) {
      if (!ok) break;
      bool touch = false;
      for (int x : sets[a]) touch = touch || host.neighbours(x).intersects(sets[b]);
      ok = touch;
    }
    if (ok) return true;
    int i = 0;
    while (i < n && assign[i] == p) assign[i++] = 0;
    if (i == n) return false;
    ++assign[i];
  }
}

std::vector<LabeledGraph> connected_graphs(int max_order) {
  std::vector<LabeledGraph> out;
  std::vector<LabeledGraph> level{LabeledGraph(1)};
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& g : level) {
      if (unavoid::components(g).size() == 1) out.push_back(g);
    }
    if (n == max_order) break;
    std::set<std::string> keys;
    std::vector<LabeledGraph> next;
    for (const auto& g : level) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        LabeledGraph h = g.with_new_vertex();
        for (int v = 0; v < n; ++v) {
          if (mask >> v & 1) h.add_edge(v, n);
        }
        auto key = unavoid::canonical_key(h, unavoid::VertexColoring::uniform(h.order()));
        if (keys.insert(key).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

struct CubicBuilder {
  int n;
  int girth;
  LabeledGraph g;
  int created = 1;
  std::vector<LabeledGraph>* out;

  bool far_enough(int a, int b) const {
    auto d = unavoid::bfs_distances(g, a);
    return d[b] < 0 || d[b] + 1 >= girth;
  }

  // Fill the open slots of vertex v (all other ends have larger index).
  void fill(int v) {
    if (v == n) {
      if (created == n) out->push_back(g);
      return;
    }
    if (v >= created) return;  // disconnected
    int need = 3 - g.degree(v);
    choose(v, need, v + 1);
  }

  void choose(int v, int need, int from) {
    if (need == 0) {
      fill(v + 1);
      return;
    }
    // Existing later vertices, increasing, then fresh ones.
    for (int w = from; w < created; ++w) {
      if (g.degree(w) >= 3 || g.adjacent(v, w) || !far_enough(v, w)) continue;
      g.add_edge(v, w);
      choose(v, need - 1, w + 1);
      g.remove_edge(v, w);
    }
    if (created + need <= n) {
      int first = created;
      for (int i = 0; i < need; ++i) g.add_edge(v, first + i);
      created += need;
      fill(v + 1);
      created -= need;
      for (int i = 0; i < need; ++i) g.remove_edge(v, first + i);
    }
  }
};

}  // namespace

std::vector<LabeledGraph> connected_cubic_graphs(int n, int min_girth) {
  std::vector<LabeledGraph> out;
  if (n < 4 || n % 2) return out;
  CubicBuilder b{n, min_girth, LabeledGraph(n), 1, &out};
  b.fill(0);
  return out;
}

namespace {

bool extend_cubic(LabeledGraph& g, VertexSet open, int max_order) {
  int v = -1;
  for (int x : open) {
    if (g.degree(x) > 3) return false;
    if (g.degree(x) < 3 && v < 0) v = x;
  }
  if (v < 0) return true;
  for (int w : open) {
    if (w <= v || g.degree(w) >= 3 || g.adjacent(v, w)) continue;
    g.add_edge(v, w);
    bool ok = extend_cubic(g, open, max_order);
    g.remove_edge(v, w);
    if (ok) return true;
  }
  if (g.order() < max_order) {
    LabeledGraph h = g.with_new_vertex();
    int fresh = g.order();
    h.add_edge(v, fresh);
    VertexSet more = open;
    more.insert(fresh);
    if (extend_cubic(h, more, max_order)) return true;
  }
  return false;
}

}  // namespace

bool has_cubic_extension(const LabeledGraph& h, const VertexSet& bag, int max_order) {
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 3) return false;
    if (!bag.contains(v) && h.degree(v) != 3) return false;
  }
  LabeledGraph g = h;
  return extend_cubic(g, bag, max_order);
}

LabeledGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  LabeledGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

LabeledGraph random_connected_subcubic(std::mt19937& rng, int n) {
  LabeledGraph g(n);
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int w = 0; w < v; ++w) {
      if (g.degree(w) < 3) open.push_back(w);
    }
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    g.add_edge(v, open[pick(rng)]);
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int tries = 0; tries < 2 * n; ++tries) {
    int a = any(rng), b = any(rng);
    if (a != b && g.degree(a) < 3 && g.degree(b) < 3) g.add_edge(a, b);
  }
  return g;
}

Permutation random_permutation(std::mt19937& rng, int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

LabeledGraph relabel(const LabeledGraph& g, const Permutation& p) {
  LabeledGraph out(g.order());
  for (auto [a, b] : g.edges()) out.add_edge(p[a], p[b]);
  return out;
}

}  // namespace oracle
