#include "unavoid/decomposition.hpp"

#include <algorithm>
#include <unordered_set>

namespace unavoid {

int PathDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w - 1;
}

namespace {

ValidationResult invalid(std::string reason) { return {Validity::Invalid, std::move(reason)}; }

std::string edge_label(const LabeledGraph& g, int a, int b) { return g.label(a) + g.label(b); }

}  // namespace

ValidationResult validate(const LabeledGraph& g, const PathDecomposition& d, int k) {
  const int n = g.order();
  if (d.bags.empty()) {
    if (n == 0) return {Validity::Valid, {}};
    return invalid("no bags");
  }
  VertexSet covered;
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    if (!d.bags[i].is_subset_of(g.vertices())) return invalid("bag " + std::to_string(i + 1) + " has a vertex outside the graph");
    covered |= d.bags[i];
  }
  for (int v = 0; v < n; ++v) {
    if (!covered.contains(v)) return invalid("vertex " + g.label(v) + " in no bag");
  }
  for (auto [a, b] : g.edges()) {
    bool hit = std::any_of(d.bags.begin(), d.bags.end(),
                           [&](const VertexSet& bag) { return bag.contains(a) && bag.contains(b); });
    if (!hit) return invalid("edge " + edge_label(g, a, b) + " uncovered");
  }
  for (int v = 0; v < n; ++v) {
    int state = 0;  // 0 before, 1 inside, 2 after the interval
    for (const auto& bag : d.bags) {
      bool in = bag.contains(v);
      if (state == 0 && in) state = 1;
      else if (state == 1 && !in) state = 2;
      else if (state == 2 && in) return invalid("bags containing " + g.label(v) + " are not contiguous");
    }
  }
  if (d.width() > k) return invalid("width " + std::to_string(d.width()) + " exceeds " + std::to_string(k));

  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    if (d.bags[i].size() != k + 1) return {Validity::Valid, {}};
    if (i + 1 < d.bags.size() && (d.bags[i] & d.bags[i + 1]).size() != k) return {Validity::Valid, {}};
  }
  return {Validity::ValidSmooth, {}};
}

namespace {

VertexSet departed_before(const PathDecomposition& d, int i) {
  VertexSet seen;
  for (int j = 0; j + 1 < i; ++j) seen |= d.bags[static_cast<std::size_t>(j)];
  return seen - d.bags[static_cast<std::size_t>(i - 1)];
}

// deg_{G_i}(v) for v in bag i: edges to vertices that already left.
int associated_degree(const LabeledGraph& g, const VertexSet& departed, int v) {
  return (g.neighbours(v) & departed).size();
}

int priority(int degree) { return degree >= 3 ? 2 : degree >= 2 ? 1 : 0; }

}  // namespace

AssociatedGraph associated_graph(const LabeledGraph& g, const PathDecomposition& d, int i) {
  if (i < 1 || i > static_cast<int>(d.bags.size())) throw std::out_of_range("bag index out of range");
  VertexSet seen;
  for (int j = 0; j < i; ++j) seen |= d.bags[static_cast<std::size_t>(j)];
  const VertexSet& bag = d.bags[static_cast<std::size_t>(i - 1)];
  LabeledGraph h(g.order(), g.u_count());
  for (auto [a, b] : g.edges()) {
    if (seen.contains(a) && seen.contains(b) && !(bag.contains(a) && bag.contains(b))) h.add_edge(a, b);
  }
  return {seen, std::move(h)};
}

int leaving_vertex(const PathDecomposition& d, int i) {
  VertexSet diff = d.bags[static_cast<std::size_t>(i - 1)] - d.bags[static_cast<std::size_t>(i)];
  if (diff.size() != 1) throw InvalidInput("bag " + std::to_string(i) + " does not lose exactly one vertex");
  return diff.first();
}

namespace {

// First 1-based bag index violating the hdf rule, or 0.
int first_hdf_violation(const LabeledGraph& g, const PathDecomposition& d) {
  const int count = static_cast<int>(d.bags.size());
  for (int i = 1; i < count; ++i) {
    VertexSet departed = departed_before(d, i);
    int best = 0;
    for (int v : d.bags[static_cast<std::size_t>(i - 1)]) best = std::max(best, priority(associated_degree(g, departed, v)));
    int x = leaving_vertex(d, i);
    if (priority(associated_degree(g, departed, x)) < best) return i;
  }
  return 0;
}

void replace_in_bags(PathDecomposition& d, std::size_t from, std::size_t to, int old_v, int new_v) {
  for (std::size_t j = from; j < to; ++j) {
    if (d.bags[j].contains(old_v)) {
      d.bags[j].erase(old_v);
      d.bags[j].insert(new_v);
    }
  }
}

// Makes v leave bag i (1-based) when all neighbours of v appear in the first i
// bags: swap v with the current leaver in every later bag.
void leave_with_all_neighbours(PathDecomposition& d, int i, int v) {
  int u = leaving_vertex(d, i);
  if (u == v) return;
  for (std::size_t j = static_cast<std::size_t>(i); j < d.bags.size(); ++j) {
    if (d.bags[j].contains(v)) {
      d.bags[j].erase(v);
      d.bags[j].insert(u);
    }
  }
}

// Makes v leave bag i when exactly one neighbour w of v has not appeared yet.
void leave_with_one_missing(PathDecomposition& d, int i, int v, int w) {
  int j = i + 1;
  while (!d.bags[static_cast<std::size_t>(j - 1)].contains(w)) ++j;
  const bool last = j == static_cast<int>(d.bags.size());
  if (!last) leave_with_all_neighbours(d, j, v);

  const VertexSet& prev = d.bags[static_cast<std::size_t>(i - 2)];
  const int x = (prev - d.bags[static_cast<std::size_t>(i - 1)]).first();
  VertexSet inserted = prev;
  inserted.insert(w);
  inserted.erase(x);

  d.bags.erase(d.bags.begin() + (j - 1));
  replace_in_bags(d, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), v, w);
  d.bags.insert(d.bags.begin() + (i - 1), inserted);
}

}  // namespace

bool is_hdf(const LabeledGraph& g, const PathDecomposition& d) { return first_hdf_violation(g, d) == 0; }

PathDecomposition make_hdf(const LabeledGraph& g, const PathDecomposition& d) {
  const int k = d.width();
  auto check = validate(g, d, k);
  if (!check.smooth()) {
    throw InvalidInput("make_hdf needs a valid smooth decomposition" + (check.reason.empty() ? "" : ": " + check.reason));
  }
  if (g.max_degree() > 3) throw InvalidInput("make_hdf needs maximum degree at most 3");

  PathDecomposition out = d;
  const std::size_t limit = out.bags.size() * out.bags.size() + 1;
  for (std::size_t step = 0;; ++step) {
    int i = first_hdf_violation(g, out);
    if (i == 0) break;
    if (step == limit) throw std::logic_error("make_hdf did not converge");

    VertexSet departed = departed_before(out, i);
    const VertexSet& bag = out.bags[static_cast<std::size_t>(i - 1)];
    int v = -1, best = -1;
    for (int c : bag) {
      int p = priority(associated_degree(g, departed, c));
      if (p > best) {
        best = p;
        v = c;
      }
    }
    VertexSet seen = departed | bag;
    VertexSet missing = g.neighbours(v) - seen;
    if (missing.empty()) {
      leave_with_all_neighbours(out, i, v);
    } else {
      // A degree >= 2 vertex of G_i in a subcubic graph misses at most one
      // neighbour; i > 1 because G_1 is edgeless.
      leave_with_one_missing(out, i, v, missing.first());
    }
  }
  return out;
}

int vertex_separation(const LabeledGraph& g, const std::vector<int>& layout) {
  VertexSet prefix;
  int best = 0;
  for (int v : layout) {
    prefix.insert(v);
    int boundary = 0;
    for (int u : prefix) {
      if (!g.neighbours(u).is_subset_of(prefix)) ++boundary;
    }
    best = std::max(best, boundary);
  }
  return best;
}

PathDecomposition layout_to_smooth(const LabeledGraph& g, const std::vector<int>& layout, int w) {
  const int n = static_cast<int>(layout.size());
  if (n != g.order()) throw InvalidInput("layout must list every vertex once");
  if (w + 1 > n) throw InvalidInput("width exceeds order - 1");
  PathDecomposition d;
  VertexSet bag, introduced;
  for (int t = 0; t <= w; ++t) {
    bag.insert(layout[static_cast<std::size_t>(t)]);
    introduced.insert(layout[static_cast<std::size_t>(t)]);
  }
  d.bags.push_back(bag);
  for (int t = w + 1; t < n; ++t) {
    int dead = -1;
    for (int v : bag) {
      if (g.neighbours(v).is_subset_of(introduced)) {
        dead = v;
        break;
      }
    }
    if (dead < 0) throw InvalidInput("layout has vertex separation above the requested width");
    bag.erase(dead);
    int next = layout[static_cast<std::size_t>(t)];
    bag.insert(next);
    introduced.insert(next);
    d.bags.push_back(bag);
  }
  return d;
}

namespace {

class SeparationSearch {
 public:
  SeparationSearch(const LabeledGraph& g, int w) : g_(g), w_(w), all_(g.vertices()) {}

  bool run() { return extend(VertexSet(), {}); }
  const std::vector<int>& layout() const { return layout_; }

 private:
  int boundary(const VertexSet& s) const {
    int b = 0;
    for (int v : s) {
      if (!g_.neighbours(v).is_subset_of(s)) ++b;
    }
    return b;
  }

  bool extend(VertexSet s, std::vector<int> order) {
    // Adding a vertex that does not grow the boundary never hurts.
    int bs = boundary(s);
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : all_ - s) {
        VertexSet t = s;
        t.insert(v);
        int bt = boundary(t);
        if (bt <= bs) {
          s = t;
          bs = bt;
          order.push_back(v);
          grew = true;
        }
      }
    }
    if (s == all_) {
      layout_ = std::move(order);
      return true;
    }
    if (failed_.contains(s)) return false;
    for (int v : all_ - s) {
      VertexSet t = s;
      t.insert(v);
      if (boundary(t) > w_) continue;
      auto next = order;
      next.push_back(v);
      if (extend(t, std::move(next))) return true;
    }
    failed_.insert(s);
    return false;
  }

  const LabeledGraph& g_;
  int w_;
  VertexSet all_;
  std::unordered_set<VertexSet, VertexSetHash> failed_;
  std::vector<int> layout_;
};

int degeneracy(const LabeledGraph& g) {
  VertexSet alive = g.vertices();
  int best = 0;
  while (!alive.empty()) {
    int pick = -1, low = g.order() + 1;
    for (int v : alive) {
      int d = (g.neighbours(v) & alive).size();
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    alive.erase(pick);
  }
  return best;
}

}  // namespace

PathwidthResult pathwidth_exact(const LabeledGraph& g) {
  if (g.order() == 0) throw InvalidInput("path-width of the empty graph is undefined");
  if (g.order() > kPathwidthMaxOrder) {
    throw TooLarge("pathwidth_exact supports at most " + std::to_string(kPathwidthMaxOrder) + " vertices");
  }
  for (int w = degeneracy(g);; ++w) {
    SeparationSearch search(g, w);
    if (search.run()) return {w, layout_to_smooth(g, search.layout(), w)};
  }
}

nlohmann::json to_json(const LabeledGraph& g, const PathDecomposition& d) {
  nlohmann::json bags = nlohmann::json::array();
  for (const auto& bag : d.bags) {
    nlohmann::json labels = nlohmann::json::array();
    for (int v : bag) labels.push_back(g.label(v));
    bags.push_back(std::move(labels));
  }
  return {{"width", d.width()}, {"bags", std::move(bags)}};
}

PathDecomposition decomposition_from_json(const LabeledGraph& g, const nlohmann::json& j) {
  PathDecomposition d;
  try {
    for (const auto& labels : j.at("bags")) {
      VertexSet bag;
      for (const auto& label : labels) bag.insert(g.index_of(label.get<std::string>()));
      d.bags.push_back(bag);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed decomposition JSON: ") + e.what());
  } catch (const GraphError& e) {
    throw InvalidInput(std::string("malformed decomposition JSON: ") + e.what());
  }
  return d;
}

}  // namespace unavoid
