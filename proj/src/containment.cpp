#include "unavoid/containment.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "unavoid/symmetry.hpp"

namespace unavoid {

std::string_view to_string(ContainmentMode m) {
  switch (m) {
    case ContainmentMode::Subgraph:
      return "subgraph";
    case ContainmentMode::Induced:
      return "induced";
    case ContainmentMode::Minor:
      return "minor";
  }
  return "subgraph";
}

ContainmentMode parse_containment_mode(std::string_view s) {
  if (s == "subgraph") return ContainmentMode::Subgraph;
  if (s == "induced") return ContainmentMode::Induced;
  if (s == "minor") return ContainmentMode::Minor;
  throw std::invalid_argument("unknown containment mode '" + std::string(s) + "'");
}

namespace {

bool is_cycle(const LabeledGraph& g) {
  if (g.order() < 3 || g.edge_count() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return components(g).size() == 1;
}

}  // namespace

PatternSet::PatternSet(std::vector<LabeledGraph> patterns, ContainmentMode mode) : mode_(mode) {
  std::unordered_set<std::string> keys;
  for (auto& p : patterns) {
    if (p.order() == 0) throw std::invalid_argument("patterns must be non-empty graphs");
    LabeledGraph plain = graph_from_edges(p.order(), p.edges());
    if (keys.insert(canonical_key(plain, VertexColoring::uniform(plain.order()))).second) {
      patterns_.push_back(std::move(plain));
    }
  }
  std::stable_sort(patterns_.begin(), patterns_.end(), [](const LabeledGraph& a, const LabeledGraph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.edge_count() < b.edge_count();
  });
  if (!patterns_.empty()) {
    bool all_cycles = true;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (!is_cycle(patterns_[i]) || patterns_[i].order() != static_cast<int>(i) + 3) all_cycles = false;
    }
    if (all_cycles) cycle_bound_ = static_cast<int>(patterns_.size()) + 2;
  }
}

PatternSet PatternSet::cycles(int a, int b, ContainmentMode mode) {
  if (a < 3 || b < a) throw std::invalid_argument("cycle range must satisfy 3 <= a <= b");
  std::vector<LabeledGraph> ps;
  for (int len = a; len <= b; ++len) ps.push_back(cycle_graph(len));
  return PatternSet(std::move(ps), mode);
}

// ---------------------------------------------------------------------------
// Subgraph and induced-subgraph embedding by backtracking over bitset domains.

namespace {

class Embedder {
 public:
  Embedder(const LabeledGraph& host, const LabeledGraph& pattern, bool induced)
      : host_(host), pat_(pattern), induced_(induced) {
    order_pattern();
    image_.assign(static_cast<std::size_t>(pat_.order()), -1);
  }

  bool run() {
    if (pat_.order() > host_.order()) return false;
    if (pat_.edge_count() > host_.edge_count()) return false;
    if (!degree_dominated()) return false;
    return extend(0, VertexSet());
  }

 private:
  // Connected-first ordering: repeatedly take the unplaced vertex with most
  // placed neighbours, breaking ties by degree.
  void order_pattern() {
    const int n = pat_.order();
    VertexSet placed;
    for (int step = 0; step < n; ++step) {
      int best = -1, best_conn = -1, best_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        int conn = (pat_.neighbours(v) & placed).size();
        int deg = pat_.degree(v);
        if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
          best = v;
          best_conn = conn;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool degree_dominated() const {
    std::vector<int> hd, pd;
    for (int v = 0; v < host_.order(); ++v) hd.push_back(host_.degree(v));
    for (int v = 0; v < pat_.order(); ++v) pd.push_back(pat_.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i) {
      if (pd[i] > hd[i]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    VertexSet domain = host_.vertices() - used;
    for (int q : pat_.neighbours(p)) {
      int img = image_[static_cast<std::size_t>(q)];
      if (img >= 0) domain &= host_.neighbours(img);
    }
    if (induced_) {
      for (std::size_t i = 0; i < depth; ++i) {
        int q = order_[i];
        if (!pat_.adjacent(p, q)) domain -= host_.neighbours(image_[static_cast<std::size_t>(q)]);
      }
    }
    const int need = pat_.degree(p);
    for (int h : domain) {
      if (host_.degree(h) < need) continue;
      image_[static_cast<std::size_t>(p)] = h;
      VertexSet next = used;
      next.insert(h);
      if (extend(depth + 1, next)) return true;
    }
    image_[static_cast<std::size_t>(p)] = -1;
    return false;
  }

  const LabeledGraph& host_;
  const LabeledGraph& pat_;
  bool induced_;
  std::vector<int> order_;
  std::vector<int> image_;
};

LabeledGraph contract(const LabeledGraph& g, int a, int b) {
  // Merge b into a, then drop b and shift higher indices down.
  LabeledGraph out(g.order() - 1);
  auto idx = [b](int v) { return v > b ? v - 1 : v; };
  for (auto [x, y] : g.edges()) {
    int s = x == b ? a : x;
    int t = y == b ? a : y;
    if (s != t) out.add_edge(idx(s), idx(t));
  }
  return out;
}

int min_degree(const LabeledGraph& g) {
  int d = g.order() ? g.degree(0) : 0;
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

class MinorSearch {
 public:
  explicit MinorSearch(const LabeledGraph& pattern)
      : pat_(pattern), prune_low_degree_(pattern.order() > 0 && min_degree(pattern) >= 2) {}

  bool run(LabeledGraph host) {
    if (prune_low_degree_) host = strip_low_degree(host);
    if (host.order() < pat_.order() || host.edge_count() < pat_.edge_count()) return false;
    if (contains_subgraph(host, pat_)) return true;
    if (host.order() == pat_.order()) return false;
    if (!failed_.insert(canonical_key(host, VertexColoring::uniform(host.order()))).second) return false;
    for (auto [a, b] : host.edges()) {
      if (run(contract(host, a, b))) return true;
    }
    return false;
  }

 private:
  // Vertices of degree <= 1 are never needed by a model of a pattern with
  // minimum degree >= 2.
  static LabeledGraph strip_low_degree(LabeledGraph g) {
    for (;;) {
      VertexSet keep;
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 2) keep.insert(v);
      }
      if (keep.size() == g.order()) return g;
      g = g.induced(keep);
    }
  }

  const LabeledGraph& pat_;
  bool prune_low_degree_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern) {
  return Embedder(host, pattern, false).run();
}

bool contains_induced(const LabeledGraph& host, const LabeledGraph& pattern) {
  return Embedder(host, pattern, true).run();
}

bool contains_minor(const LabeledGraph& host, const LabeledGraph& pattern) {
  return MinorSearch(pattern).run(graph_from_edges(host.order(), host.edges()));
}

bool contains(const LabeledGraph& host, const LabeledGraph& pattern, ContainmentMode mode) {
  switch (mode) {
    case ContainmentMode::Subgraph:
      return contains_subgraph(host, pattern);
    case ContainmentMode::Induced:
      return contains_induced(host, pattern);
    case ContainmentMode::Minor:
      return contains_minor(host, pattern);
  }
  return false;
}

namespace {

// A shortest cycle is chordless, so {C_3..C_L} is hit as a subgraph iff as an
// induced subgraph iff girth <= L. As minors, C_3 alone decides it.
bool cycle_fast_path(const LabeledGraph& host, int bound, ContainmentMode mode) {
  if (mode == ContainmentMode::Minor) return !is_forest(host);
  return has_cycle_at_most(host, bound);
}

bool any_pattern(const LabeledGraph& host, const PatternSet& ps, ContainmentMode mode) {
  if (auto bound = ps.short_cycle_bound()) return cycle_fast_path(host, *bound, mode);
  return std::any_of(ps.patterns().begin(), ps.patterns().end(),
                     [&](const LabeledGraph& p) { return contains(host, p, mode); });
}

}  // namespace

bool in_super(const LabeledGraph& host, const PatternSet& ps) { return any_pattern(host, ps, ps.mode()); }

bool pair_is_good(const LabeledGraph& h, const VertexSet& bag, const PatternSet& ps) {
  if (ps.mode() == ContainmentMode::Induced) {
    return any_pattern(h.induced(h.vertices() - bag), ps, ContainmentMode::Subgraph);
  }
  return any_pattern(h, ps, ps.mode());
}

std::optional<bool> ContainmentCache::lookup(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void ContainmentCache::store(const std::string& key, bool value) {
  std::lock_guard lock(mu_);
  map_.emplace(key, value);
}

std::size_t ContainmentCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

std::size_t ContainmentCache::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

bool pair_is_good_cached(const LabeledGraph& h, const VertexSet& bag, const PatternSet& ps,
                         ContainmentCache& cache) {
  if (ps.short_cycle_bound() || ps.empty()) return pair_is_good(h, bag, ps);
  LabeledGraph tested = ps.mode() == ContainmentMode::Induced ? h.induced(h.vertices() - bag)
                                                               : graph_from_edges(h.order(), h.edges());
  std::string key = canonical_key(tested, VertexColoring::uniform(tested.order()));
  if (auto hit = cache.lookup(key)) return *hit;
  bool good = pair_is_good(h, bag, ps);
  cache.store(key, good);
  return good;
}

}  // namespace unavoid
