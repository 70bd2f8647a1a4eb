#include "unavoid/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace unavoid {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : p) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

VertexColoring::VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {
  int max_color = -1;
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("negative vertex color");
    max_color = std::max(max_color, c);
  }
  std::vector<char> used(static_cast<std::size_t>(max_color + 1), 0);
  for (int c : colors_) used[static_cast<std::size_t>(c)] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw std::invalid_argument("vertex colors must form a contiguous range from 0");
  }
  color_count_ = max_color + 1;
}

VertexColoring VertexColoring::uniform(int n) {
  return VertexColoring(std::vector<int>(static_cast<std::size_t>(n), 0));
}

VertexColoring VertexColoring::bag_membership(int n, const VertexSet& bag) {
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  bool outside = false;
  for (int v = 0; v < n; ++v) {
    if (bag.contains(v)) {
      colors[static_cast<std::size_t>(v)] = 0;
    } else {
      outside = true;
    }
  }
  if (!outside || bag.empty()) std::fill(colors.begin(), colors.end(), 0);
  return VertexColoring(std::move(colors));
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree) : degree_(degree) { elements_.push_back(identity_permutation(degree)); }

PermGroup PermGroup::generate(int degree, const std::vector<Permutation>& generators, std::size_t cap) {
  PermGroup g(degree);
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) throw std::invalid_argument("generator degree mismatch");
    if (p != g.elements_.front()) gens.push_back(p);
  }
  if (gens.empty()) return g;
  std::unordered_set<Permutation, PermutationHash> seen(g.elements_.begin(), g.elements_.end());
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = compose(s, g.elements_[head]);
      if (seen.insert(next).second) {
        if (g.elements_.size() >= cap) {
          throw GroupTooLarge("automorphism group exceeds cap of " + std::to_string(cap) + " elements");
        }
        g.elements_.push_back(std::move(next));
      }
    }
  }
  return g;
}

VertexSet PermGroup::orbit(int v) const {
  VertexSet o;
  for (const auto& p : elements_) o.insert(p[static_cast<std::size_t>(v)]);
  return o;
}

std::vector<VertexSet> PermGroup::orbits(const VertexSet& domain) const {
  std::vector<VertexSet> out;
  VertexSet done;
  for (int v : domain) {
    if (done.contains(v)) continue;
    VertexSet o = orbit(v);
    done |= o;
    out.push_back(o);
  }
  return out;
}

VertexSet PermGroup::orbit_representatives(const VertexSet& bag) const {
  VertexSet reps;
  for (const auto& o : orbits(bag)) reps.insert(o.first());
  return reps;
}

PermGroup PermGroup::stabilizer(int v) const {
  PermGroup s(degree_);
  s.elements_.clear();
  for (const auto& p : elements_) {
    if (p[static_cast<std::size_t>(v)] == v) s.elements_.push_back(p);
  }
  return s;
}

bool PermGroup::verify_group_axioms() const {
  std::unordered_set<Permutation, PermutationHash> set(elements_.begin(), elements_.end());
  if (set.size() != elements_.size()) return false;
  if (!set.contains(identity_permutation(degree_))) return false;
  for (const auto& a : elements_) {
    if (!set.contains(inverse(a))) return false;
    for (const auto& b : elements_) {
      if (!set.contains(compose(a, b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical labeling: equitable refinement, individualization on the first
// non-singleton cell, lexicographically smallest leaf certificate. Automorphisms
// found at equivalent leaves prune sibling subtrees (orbits of the pointwise
// stabilizer of the current prefix) and trigger a jump back to the first path.

namespace {

struct Partition {
  std::vector<int> lab;       // vertices in cell order
  std::vector<int> cell_end;  // valid at cell starts
  std::vector<int> start_of;  // cell start containing each vertex
  int cells = 0;
};

class Refiner {
 public:
  explicit Refiner(const LabeledGraph& g) : g_(g), n_(g.order()) {
    counts_.resize(static_cast<std::size_t>(n_));
    in_queue_.resize(static_cast<std::size_t>(n_));
  }

  void refine(Partition& p, std::deque<int>& queue) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int s : queue) in_queue_[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && p.cells < n_) {
      int s = queue.front();
      queue.pop_front();
      in_queue_[static_cast<std::size_t>(s)] = 0;
      VertexSet splitter;
      for (int i = s; i < p.cell_end[static_cast<std::size_t>(s)]; ++i) splitter.insert(p.lab[static_cast<std::size_t>(i)]);

      for (int start = 0; start < n_;) {
        int end = p.cell_end[static_cast<std::size_t>(start)];
        if (end - start > 1) split_cell(p, start, end, splitter, queue);
        start = end;
      }
    }
    queue.clear();
  }

 private:
  void split_cell(Partition& p, int start, int end, const VertexSet& splitter, std::deque<int>& queue) {
    auto first = p.lab.begin() + start;
    auto last = p.lab.begin() + end;
    bool uniform = true;
    int c0 = (g_.neighbours(*first) & splitter).size();
    for (auto it = first; it != last; ++it) {
      int c = (g_.neighbours(*it) & splitter).size();
      counts_[static_cast<std::size_t>(*it)] = c;
      if (c != c0) uniform = false;
    }
    if (uniform) return;
    std::sort(first, last, [&](int a, int b) {
      int ca = counts_[static_cast<std::size_t>(a)], cb = counts_[static_cast<std::size_t>(b)];
      return ca != cb ? ca < cb : a < b;
    });
    int frag = start;
    for (int i = start + 1; i <= end; ++i) {
      if (i == end || counts_[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] !=
                          counts_[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(frag)])]) {
        p.cell_end[static_cast<std::size_t>(frag)] = i;
        for (int j = frag; j < i; ++j) p.start_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(j)])] = frag;
        if (!in_queue_[static_cast<std::size_t>(frag)]) {
          in_queue_[static_cast<std::size_t>(frag)] = 1;
          queue.push_back(frag);
        }
        if (frag != start) ++p.cells;
        frag = i;
      }
    }
  }

  const LabeledGraph& g_;
  int n_;
  std::vector<int> counts_;
  std::vector<char> in_queue_;
};

using Certificate = std::vector<VertexSet>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  CanonSearch(const LabeledGraph& g, const VertexColoring& c) : g_(g), c_(c), n_(g.order()), refiner_(g) {
    if (c.size() != n_) throw std::invalid_argument("coloring does not match graph order");
  }

  void run() {
    Partition p;
    p.lab.resize(static_cast<std::size_t>(n_));
    p.cell_end.assign(static_cast<std::size_t>(n_), 0);
    p.start_of.assign(static_cast<std::size_t>(n_), 0);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return c_[a] < c_[b]; });
    std::deque<int> queue;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && c_[p.lab[static_cast<std::size_t>(j)]] == c_[p.lab[static_cast<std::size_t>(i)]]) ++j;
      p.cell_end[static_cast<std::size_t>(i)] = j;
      for (int t = i; t < j; ++t) p.start_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(t)])] = i;
      ++p.cells;
      queue.push_back(i);
      i = j;
    }
    refiner_.refine(p, queue);
    std::vector<int> path;
    dfs(p, path);
  }

  std::string key() const {
    std::string out;
    out.push_back(static_cast<char>(n_));
    out.push_back(static_cast<char>(c_.color_count()));
    std::vector<int> sizes(static_cast<std::size_t>(c_.color_count()), 0);
    for (int v = 0; v < n_; ++v) ++sizes[static_cast<std::size_t>(c_[v])];
    for (int s : sizes) out.push_back(static_cast<char>(s));
    unsigned acc = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | (best_cert_[static_cast<std::size_t>(i)].contains(j) ? 1U : 0U);
        if (++bits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    }
    if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
  }

  Permutation relabeling() const {
    Permutation r(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) r[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(i)])] = i;
    return r;
  }

  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  static constexpr int kNoJump = -1;

  int dfs(Partition& p, std::vector<int>& path) {
    if (p.cells == n_) return leaf(p, path);
    const int depth = static_cast<int>(path.size());

    int target = 0;
    while (p.cell_end[static_cast<std::size_t>(target)] - target == 1) target = p.cell_end[static_cast<std::size_t>(target)];
    std::vector<int> children(p.lab.begin() + target, p.lab.begin() + p.cell_end[static_cast<std::size_t>(target)]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::size_t gens_used = 0;
    UnionFind orbits(n_);
    for (int v : children) {
      if (!explored.empty()) {
        if (gens_used != generators_.size()) {
          absorb_generators(orbits, path, gens_used);
          gens_used = generators_.size();
        }
        int rv = orbits.find(v);
        bool pruned = std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == rv; });
        if (pruned) continue;
      }
      Partition child = p;
      individualize(child, target, v);
      path.push_back(v);
      int jump = dfs(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  void absorb_generators(UnionFind& orbits, const std::vector<int>& path, std::size_t from) {
    for (std::size_t i = from; i < generators_.size(); ++i) {
      const auto& gamma = generators_[i];
      bool fixes = std::all_of(path.begin(), path.end(), [&](int x) { return gamma[static_cast<std::size_t>(x)] == x; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) orbits.unite(x, gamma[static_cast<std::size_t>(x)]);
    }
  }

  void individualize(Partition& p, int start, int v) {
    int end = p.cell_end[static_cast<std::size_t>(start)];
    auto it = std::find(p.lab.begin() + start, p.lab.begin() + end, v);
    std::iter_swap(p.lab.begin() + start, it);
    p.cell_end[static_cast<std::size_t>(start)] = start + 1;
    p.cell_end[static_cast<std::size_t>(start + 1)] = end;
    for (int i = start + 1; i < end; ++i) p.start_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = start + 1;
    ++p.cells;
    std::deque<int> queue{start, start + 1};
    refiner_.refine(p, queue);
  }

  Certificate certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    Certificate cert(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int w : g_.neighbours(lab[static_cast<std::size_t>(i)])) cert[static_cast<std::size_t>(i)].insert(pos[static_cast<std::size_t>(w)]);
    }
    return cert;
  }

  static Permutation leaf_map(const std::vector<int>& from, const std::vector<int>& to) {
    Permutation gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[static_cast<std::size_t>(from[i])] = to[i];
    return gamma;
  }

  int leaf(const Partition& p, const std::vector<int>& path) {
    Certificate cert = certificate(p.lab);
    if (first_lab_.empty() && n_ > 0) {
      first_lab_ = p.lab;
      first_cert_ = cert;
      first_path_ = path;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      return kNoJump;
    }
    if (n_ == 0) {
      best_cert_.clear();
      return kNoJump;
    }
    if (cert == first_cert_) {
      generators_.push_back(leaf_map(first_lab_, p.lab));
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) ++common;
      return static_cast<int>(common);
    }
    if (cert == best_cert_) {
      generators_.push_back(leaf_map(best_lab_, p.lab));
      return kNoJump;
    }
    if (cert < best_cert_) {
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
    }
    return kNoJump;
  }

  const LabeledGraph& g_;
  const VertexColoring& c_;
  int n_;
  Refiner refiner_;
  std::vector<int> first_lab_, best_lab_, first_path_;
  Certificate first_cert_, best_cert_;
  std::vector<Permutation> generators_;
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g, const VertexColoring& c) {
  CanonSearch s(g, c);
  s.run();
  return {s.key(), s.relabeling()};
}

std::string canonical_key(const LabeledGraph& g, const VertexColoring& c) {
  CanonSearch s(g, c);
  s.run();
  return s.key();
}

std::vector<Permutation> automorphism_generators(const LabeledGraph& g, const VertexColoring& c) {
  CanonSearch s(g, c);
  s.run();
  return s.generators();
}

PermGroup aut_fixing_bag(const LabeledGraph& h, const VertexSet& bag, std::size_t cap) {
  auto coloring = VertexColoring::bag_membership(h.order(), bag);
  return PermGroup::generate(h.order(), automorphism_generators(h, coloring), cap);
}

std::string pair_key(const LabeledGraph& h, const VertexSet& bag) {
  auto key = canonical_key(h, VertexColoring::bag_membership(h.order(), bag));
  // An empty and a full bag both collapse to one color class.
  if (bag.empty() && h.order() > 0) key.push_back('\0');
  return key;
}

LabeledGraph apply_permutation(const LabeledGraph& g, const Permutation& p) {
  LabeledGraph out(g.order(), g.u_count());
  for (auto [a, b] : g.edges()) out.add_edge(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return out;
}

bool is_automorphism(const LabeledGraph& g, const Permutation& p) {
  for (auto [a, b] : g.edges()) {
    if (!g.adjacent(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)])) return false;
  }
  return true;
}

}  // namespace unavoid
