#include "unavoid/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "unavoid/graph6.hpp"

namespace unavoid {

std::string_view to_string(Algorithm a) { return a == Algorithm::Base ? "base" : "optimized"; }

std::string_view to_string(DedupScope d) { return d == DedupScope::AllEnqueued ? "all-enqueued" : "queue-only"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::Unavoidable:
      return "unavoidable";
    case Verdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

namespace {

// Edge sets inside a bag are stored as bitmasks over the bag's vertex pairs in
// lexicographic order.
constexpr int kMaxK = 15;
using EdgeMask = VertexSet;

struct BagPairs {
  std::vector<int> vertices;                // bag in increasing order
  std::vector<std::pair<int, int>> pairs;   // non-adjacent pairs, lexicographic
  std::vector<int> index;                   // index[a * n + b], -1 if absent
  int n = 0;

  BagPairs(const LabeledGraph& h, const VertexSet& bag) : n(h.order()) {
    index.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int v : bag) vertices.push_back(v);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        int a = vertices[i], b = vertices[j];
        if (h.adjacent(a, b)) continue;
        int id = static_cast<int>(pairs.size());
        index[static_cast<std::size_t>(a * n + b)] = id;
        index[static_cast<std::size_t>(b * n + a)] = id;
        pairs.emplace_back(a, b);
      }
    }
  }

  EdgeMask image(const EdgeMask& m, const Permutation& phi) const {
    EdgeMask out;
    for (int id : m) {
      auto [a, b] = pairs[static_cast<std::size_t>(id)];
      out.insert(index[static_cast<std::size_t>(phi[static_cast<std::size_t>(a)] * n + phi[static_cast<std::size_t>(b)])]);
    }
    return out;
  }
};

VertexSet image(const VertexSet& s, const Permutation& phi) {
  VertexSet out;
  for (int v : s) out.insert(phi[static_cast<std::size_t>(v)]);
  return out;
}

// Visits index combinations of {0..m-1} of size s in lexicographic order;
// stops when `visit` returns true.
template <class Visit>
bool for_each_combination(int m, int s, Visit&& visit) {
  if (s > m || s < 0) return false;
  std::vector<int> c(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (visit(c)) return true;
    int i = s - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - s + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Edge sets inside the bag that bring every bag vertex to degree `target`,
// lexicographically (all have the same size).
template <class Visit>
bool for_each_regular_completion(const LabeledGraph& h, const BagPairs& bp, int target, Visit&& visit) {
  std::vector<int> need(static_cast<std::size_t>(h.order()), 0);
  int total = 0;
  for (int v : bp.vertices) {
    int d = target - h.degree(v);
    if (d < 0) return false;
    need[static_cast<std::size_t>(v)] = d;
    total += d;
  }
  if (total % 2) return false;
  const int m = static_cast<int>(bp.pairs.size());
  // avail[id][v]: pairs with index >= id touching v.
  std::vector<std::vector<int>> avail(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(h.order()), 0));
  for (int id = m - 1; id >= 0; --id) {
    avail[static_cast<std::size_t>(id)] = avail[static_cast<std::size_t>(id + 1)];
    auto [a, b] = bp.pairs[static_cast<std::size_t>(id)];
    ++avail[static_cast<std::size_t>(id)][static_cast<std::size_t>(a)];
    ++avail[static_cast<std::size_t>(id)][static_cast<std::size_t>(b)];
  }
  EdgeMask chosen;
  int remaining = total / 2;
  auto rec = [&](auto&& self, int id) -> bool {
    if (remaining == 0) return visit(chosen);
    if (id == m) return false;
    for (int v : bp.vertices) {
      if (need[static_cast<std::size_t>(v)] > avail[static_cast<std::size_t>(id)][static_cast<std::size_t>(v)]) return false;
    }
    auto [a, b] = bp.pairs[static_cast<std::size_t>(id)];
    auto& na = need[static_cast<std::size_t>(a)];
    auto& nb = need[static_cast<std::size_t>(b)];
    if (na > 0 && nb > 0) {
      --na;
      --nb;
      --remaining;
      chosen.insert(id);
      bool stop = self(self, id + 1);
      chosen.erase(id);
      ++remaining;
      ++na;
      ++nb;
      if (stop) return true;
    }
    return self(self, id + 1);
  };
  return rec(rec, 0);
}

LabeledGraph with_edges(const LabeledGraph& h, const BagPairs& bp, const EdgeMask& m) {
  LabeledGraph g = h;
  for (int id : m) {
    auto [a, b] = bp.pairs[static_cast<std::size_t>(id)];
    g.add_edge(a, b);
  }
  return g;
}

bool regular_cubic(const GraphClass& c) { return c.regular_degree && *c.regular_degree == 3; }

}  // namespace

void validate_config(const SearchConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
  if (cfg.k > kMaxK) throw std::invalid_argument("k above " + std::to_string(kMaxK) + " is not supported");
  if (cfg.effective_max_order() < cfg.k + 1) throw std::invalid_argument("max order must be at least k+1");
  if (cfg.effective_max_order() > LabeledGraph::kMaxOrder) throw std::invalid_argument("max order exceeds graph capacity");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (!cfg.graph_class.membership || !cfg.graph_class.feasibility) throw std::invalid_argument("graph class is incomplete");
}

Pair initial_pair(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Pair p{VertexSet::prefix(k + 1), LabeledGraph(k + 1, k), {}};
  return p;
}

std::optional<LabeledGraph> check_completions(const Pair& p, const SearchConfig& cfg, const PermGroup& grp,
                                              PhaseStats* stats) {
  const LabeledGraph& h = p.graph;
  const GraphClass& cls = cfg.graph_class;
  if (cls.regular_degree && *cls.regular_degree % 2 == 1 && h.order() % 2 == 1) {
    if (stats) ++stats->completion_parity_skips;
    return std::nullopt;
  }
  BagPairs bp(h, p.bag);
  std::unordered_set<EdgeMask, VertexSetHash> rejected;
  std::optional<LabeledGraph> found;
  auto test = [&](const EdgeMask& m) -> bool {
    if (rejected.contains(m)) {
      if (stats) ++stats->completions_skipped_by_symmetry;
      return false;
    }
    if (stats) ++stats->completions_tested;
    LabeledGraph g = with_edges(h, bp, m);
    if (cls.membership(g) && !in_super(g, cfg.patterns)) {
      found = std::move(g);
      return true;
    }
    if (grp.order() > 1) {
      for (const auto& phi : grp.elements()) rejected.insert(bp.image(m, phi));
    }
    return false;
  };

  if (cls.regular_degree) {
    for_each_regular_completion(h, bp, *cls.regular_degree, test);
  } else {
    const int m = static_cast<int>(bp.pairs.size());
    for (int s = 0; s <= m && !found; ++s) {
      for_each_combination(m, s, [&](const std::vector<int>& c) {
        EdgeMask mask;
        for (int id : c) mask.insert(id);
        return test(mask);
      });
    }
  }
  return found;
}

std::vector<int> leaving_candidates(const Pair& p, const PermGroup& grp, const SearchConfig& cfg) {
  if (cfg.use_hdf && regular_cubic(cfg.graph_class)) {
    int best = -1, best_deg = 1;
    for (int v : p.bag) {
      if (p.graph.degree(v) > best_deg) {
        best = v;
        best_deg = p.graph.degree(v);
      }
    }
    if (best >= 0) return {best};
  }
  std::vector<int> out;
  for (int v : grp.orbit_representatives(p.bag)) out.push_back(v);
  return out;
}

std::vector<Pair> successors(const Pair& p, int u, const PermGroup& grp, const SearchConfig& cfg, PhaseStats* stats) {
  const LabeledGraph& h = p.graph;
  const GraphClass& cls = cfg.graph_class;
  const int fresh = h.order();
  VertexSet next_bag = p.bag;
  next_bag.erase(u);
  next_bag.insert(fresh);

  std::vector<int> pool;
  int fixed_size = -1;
  if (cls.regular_degree) {
    // u leaves for good, so it must reach the regular degree now, and only
    // vertices still below that degree can take an edge.
    fixed_size = *cls.regular_degree - h.degree(u);
    if (fixed_size < 0) return {};
    for (int y : p.bag) {
      if (y != u && h.degree(y) < *cls.regular_degree) pool.push_back(y);
    }
  } else {
    for (int y : p.bag) {
      if (y != u) pool.push_back(y);
    }
  }

  PermGroup stab = grp.order() > 1 ? grp.stabilizer(u) : grp;
  std::unordered_set<VertexSet, VertexSetHash> covered;
  std::vector<Pair> out;
  auto visit = [&](const std::vector<int>& c) -> bool {
    VertexSet y;
    for (int i : c) y.insert(pool[static_cast<std::size_t>(i)]);
    if (covered.contains(y)) {
      if (stats) ++stats->successors_skipped_by_symmetry;
      return false;
    }
    if (stab.order() > 1) {
      for (const auto& phi : stab.elements()) covered.insert(image(y, phi));
    }
    if (stats) ++stats->successors_generated;
    LabeledGraph next = h.with_new_vertex();
    for (int v : y) next.add_edge(u, v);
    PruneReason why = cls.feasibility(next_bag, next);
    if (why != PruneReason::None) {
      if (stats) ++stats->pruned_infeasible[static_cast<std::size_t>(why)];
      return false;
    }
    if (pair_is_good(next, next_bag, cfg.patterns)) {
      if (stats) ++stats->pruned_good;
      return false;
    }
    Pair q{next_bag, std::move(next), {}};
    if (cfg.record_trace) {
      q.trace = p.trace;
      q.trace.push_back(next_bag);
    }
    out.push_back(std::move(q));
    return false;
  };
  const int m = static_cast<int>(pool.size());
  if (fixed_size >= 0) {
    for_each_combination(m, fixed_size, visit);
  } else {
    for (int s = 0; s <= m; ++s) for_each_combination(m, s, visit);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small-order sweep.

std::vector<LabeledGraph> small_class_members(const GraphClass& c, int max_order) {
  std::vector<LabeledGraph> members;
  std::vector<LabeledGraph> level;
  if (max_order < 1) return members;
  level.emplace_back(1);
  const int cap = c.max_degree.value_or(LabeledGraph::kMaxOrder);
  for (int n = 1;; ++n) {
    for (const auto& g : level) {
      if (c.membership(g)) members.push_back(g);
    }
    if (n == max_order) break;
    std::vector<LabeledGraph> next;
    std::unordered_set<std::string> keys;
    for (const auto& g : level) {
      std::vector<int> open;
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) < cap) open.push_back(v);
      }
      const int limit = std::min(cap, static_cast<int>(open.size()));
      for (int s = 0; s <= limit; ++s) {
        for_each_combination(static_cast<int>(open.size()), s, [&](const std::vector<int>& comb) {
          LabeledGraph h = g.with_new_vertex();
          for (int i : comb) h.add_edge(n, open[static_cast<std::size_t>(i)]);
          if (keys.insert(canonical_key(h, VertexColoring::uniform(h.order()))).second) next.push_back(std::move(h));
          return false;
        });
      }
    }
    level = std::move(next);
  }
  return members;
}

// ---------------------------------------------------------------------------
// Phase loop.

namespace {

struct Expansion {
  PhaseStats completion_stats;
  PhaseStats successor_stats;
  std::optional<LabeledGraph> counterexample;
  std::vector<Pair> children;
  std::vector<std::string> keys;
  bool probed = false;
};

std::string pair_error(const Pair& p, const std::string& what) {
  std::string bag;
  for (int v : p.bag) bag += (bag.empty() ? "" : ",") + p.graph.label(v);
  return what + " at pair H=" + graph6_encode(p.graph) + " U={" + bag + "}";
}

void add_into(PhaseStats& into, const PhaseStats& s) {
  into.popped += s.popped;
  into.group_elements += s.group_elements;
  into.completions_tested += s.completions_tested;
  into.completions_skipped_by_symmetry += s.completions_skipped_by_symmetry;
  into.completion_parity_skips += s.completion_parity_skips;
  into.leaving_candidates += s.leaving_candidates;
  into.successors_generated += s.successors_generated;
  into.successors_skipped_by_symmetry += s.successors_skipped_by_symmetry;
  into.pruned_good += s.pruned_good;
  for (std::size_t i = 0; i < into.pruned_infeasible.size(); ++i) into.pruned_infeasible[i] += s.pruned_infeasible[i];
  into.pruned_duplicate += s.pruned_duplicate;
  into.enqueued += s.enqueued;
}

class Engine {
 public:
  explicit Engine(const SearchConfig& cfg) : cfg_(cfg), optimized_(cfg.algorithm == Algorithm::Optimized) {}

  SearchOutcome run_from(int phase, std::vector<Pair> frontier, SearchStats stats) {
    const int limit = cfg_.effective_max_order();
    std::vector<std::string> keys;
    if (optimized_) {
      for (const auto& p : frontier) keys.push_back(pair_key(p.graph, p.bag));
    }
    while (!frontier.empty()) {
      if (cfg_.on_checkpoint) cfg_.on_checkpoint(phase, frontier, stats);
      const bool final = cfg_.k + phase >= limit;
      PhaseStats ps;
      ps.phase = phase;

      std::unordered_set<std::string> queued;
      if (optimized_) queued.insert(keys.begin(), keys.end());
      std::vector<Pair> next;
      std::vector<std::string> next_keys;
      bool survivor = false;

      const std::size_t batch = cfg_.workers == 1 ? 1 : static_cast<std::size_t>(cfg_.workers) * 32;
      for (std::size_t start = 0; start < frontier.size(); start += batch) {
        const std::size_t end = std::min(frontier.size(), start + batch);
        std::vector<Expansion> results = expand_batch(frontier, start, end, final, !survivor);
        for (std::size_t i = start; i < end; ++i) {
          Expansion& ex = results[i - start];
          add_into(ps, ex.completion_stats);
          if (ex.counterexample) {
            stats.phases.push_back(ps);
            SearchOutcome out;
            out.verdict = Verdict::Counterexample;
            out.counterexample = std::move(ex.counterexample);
            out.phase = phase;
            out.witness = frontier[i].trace;
            out.stats = std::move(stats);
            return out;
          }
          if (optimized_ && cfg_.dedup == DedupScope::QueueOnly) queued.erase(keys[i]);
          if (final) {
            if (!survivor && ex.probed) {
              add_into(ps, ex.successor_stats);
              survivor = !ex.children.empty();
            }
            continue;
          }
          add_into(ps, ex.successor_stats);
          for (std::size_t c = 0; c < ex.children.size(); ++c) {
            if (optimized_) {
              if (!queued.insert(ex.keys[c]).second) {
                ++ps.pruned_duplicate;
                continue;
              }
              next_keys.push_back(std::move(ex.keys[c]));
            }
            ++ps.enqueued;
            next.push_back(std::move(ex.children[c]));
          }
        }
      }
      stats.phases.push_back(ps);
      if (cfg_.on_phase) cfg_.on_phase(ps, next.size());
      if (final) {
        SearchOutcome out;
        out.verdict = survivor ? Verdict::Undecided : Verdict::Unavoidable;
        out.max_order = limit;
        out.stats = std::move(stats);
        return out;
      }
      frontier = std::move(next);
      keys = std::move(next_keys);
      ++phase;
    }
    SearchOutcome out;
    out.verdict = Verdict::Unavoidable;
    out.stats = std::move(stats);
    return out;
  }

 private:
  std::vector<Expansion> expand_batch(const std::vector<Pair>& frontier, std::size_t start, std::size_t end, bool final,
                                      bool probe) {
    std::vector<Expansion> results(end - start);
    const std::size_t count = end - start;
    const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg_.workers), count));
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) results[i] = expand(frontier[start + i], final, probe);
      return results;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = expand(frontier[start + i], final, probe);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
  }

  Expansion expand(const Pair& p, bool final, bool probe) {
    Expansion ex;
    PermGroup grp(p.graph.order());
    if (optimized_) {
      try {
        grp = aut_fixing_bag(p.graph, p.bag, cfg_.group_cap);
      } catch (const GroupTooLarge& e) {
        throw SearchError(pair_error(p, e.what()));
      }
      if (cfg_.on_group) {
        std::lock_guard lock(callback_mu_);
        cfg_.on_group(p, grp);
      }
    }
    ex.completion_stats.popped = 1;
    ex.completion_stats.group_elements = grp.order();
    ex.counterexample = check_completions(p, cfg_, grp, &ex.completion_stats);
    if (ex.counterexample) return ex;
    if (final && !probe) return ex;
    ex.probed = true;

    std::vector<int> leaving;
    if (optimized_) {
      leaving = leaving_candidates(p, grp, cfg_);
    } else {
      for (int v : p.bag) leaving.push_back(v);
    }
    ex.successor_stats.leaving_candidates = leaving.size();
    for (int u : leaving) {
      auto children = successors(p, u, grp, cfg_, &ex.successor_stats);
      for (auto& c : children) {
        if (optimized_ && !final) ex.keys.push_back(pair_key(c.graph, c.bag));
        ex.children.push_back(std::move(c));
        if (final) return ex;
      }
    }
    return ex;
  }

  const SearchConfig& cfg_;
  bool optimized_;
  std::mutex callback_mu_;
};

SearchOutcome start(const SearchConfig& cfg) {
  validate_config(cfg);
  SearchStats stats;
  if (cfg.small_order_sweep) {
    auto small = small_class_members(cfg.graph_class, std::min(cfg.k, cfg.effective_max_order()));
    stats.small_order_graphs = small.size();
    for (auto& g : small) {
      if (!in_super(g, cfg.patterns)) {
        SearchOutcome out;
        out.verdict = Verdict::Counterexample;
        out.phase = g.order() - cfg.k;
        out.counterexample = std::move(g);
        out.stats = std::move(stats);
        return out;
      }
    }
  }
  Pair init = initial_pair(cfg.k);
  if (cfg.record_trace) init.trace.push_back(init.bag);
  if (pair_is_good(init.graph, init.bag, cfg.patterns)) {
    SearchOutcome out;
    out.verdict = Verdict::Unavoidable;
    out.stats = std::move(stats);
    return out;
  }
  std::vector<Pair> frontier;
  frontier.push_back(std::move(init));
  return Engine(cfg).run_from(1, std::move(frontier), std::move(stats));
}

}  // namespace

SearchOutcome run_search(const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.algorithm = Algorithm::Optimized;
  return start(c);
}

SearchOutcome run_search_base(const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.algorithm = Algorithm::Base;
  return start(c);
}

SearchOutcome run(const SearchConfig& cfg) { return start(cfg); }

SearchOutcome resume_search(const SearchConfig& cfg, const Checkpoint& cp) {
  validate_config(cfg);
  return Engine(cfg).run_from(cp.phase, cp.frontier, cp.stats);
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string frontier_digest(const std::vector<Pair>& frontier) {
  std::vector<std::string> keys;
  keys.reserve(frontier.size());
  for (const auto& p : frontier) keys.push_back(pair_key(p.graph, p.bag));
  std::sort(keys.begin(), keys.end());
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& k : keys) {
    h = fnv1a(h, k);
    h = fnv1a(h, std::string_view("\x1f", 1));
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
  return out;
}

nlohmann::json labels_of(const LabeledGraph& g, const VertexSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : s) a.push_back(g.label(v));
  return a;
}

VertexSet set_from_labels(const LabeledGraph& g, const nlohmann::json& a) {
  VertexSet s;
  for (const auto& l : a) s.insert(g.index_of(l.get<std::string>()));
  return s;
}

constexpr const char* kReasonKeys[kPruneReasonCount] = {"none", "degree_too_high", "finished_vertex_deficient", "parity",
                                                        "girth_floor"};

}  // namespace

nlohmann::json config_echo(const SearchConfig& cfg) {
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& p : cfg.patterns.patterns()) patterns.push_back(graph6_encode(p));
  return {{"k", cfg.k},
          {"patterns", patterns},
          {"mode", std::string(to_string(cfg.patterns.mode()))},
          {"class", cfg.graph_class.name},
          {"max_order", cfg.effective_max_order()},
          {"algorithm", std::string(to_string(cfg.algorithm))},
          {"hdf", cfg.use_hdf},
          {"dedup", std::string(to_string(cfg.dedup))}};
}

nlohmann::json stats_json(const SearchStats& s) {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& p : s.phases) {
    nlohmann::json infeasible = nlohmann::json::object();
    for (std::size_t i = 1; i < kPruneReasonCount; ++i) infeasible[kReasonKeys[i]] = p.pruned_infeasible[i];
    phases.push_back({{"phase", p.phase},
                      {"popped", p.popped},
                      {"group_elements", p.group_elements},
                      {"completions_tested", p.completions_tested},
                      {"completions_skipped_by_symmetry", p.completions_skipped_by_symmetry},
                      {"completion_parity_skips", p.completion_parity_skips},
                      {"leaving_candidates", p.leaving_candidates},
                      {"successors_generated", p.successors_generated},
                      {"successors_skipped_by_symmetry", p.successors_skipped_by_symmetry},
                      {"pruned_good", p.pruned_good},
                      {"pruned_infeasible", infeasible},
                      {"pruned_duplicate", p.pruned_duplicate},
                      {"enqueued", p.enqueued}});
  }
  return {{"small_order_graphs", s.small_order_graphs}, {"phases", phases}};
}

SearchStats stats_from_json(const nlohmann::json& j) {
  SearchStats s;
  s.small_order_graphs = j.at("small_order_graphs").get<std::size_t>();
  for (const auto& p : j.at("phases")) {
    PhaseStats ps;
    ps.phase = p.at("phase").get<int>();
    ps.popped = p.at("popped").get<std::size_t>();
    ps.group_elements = p.at("group_elements").get<std::size_t>();
    ps.completions_tested = p.at("completions_tested").get<std::size_t>();
    ps.completions_skipped_by_symmetry = p.at("completions_skipped_by_symmetry").get<std::size_t>();
    ps.completion_parity_skips = p.at("completion_parity_skips").get<std::size_t>();
    ps.leaving_candidates = p.at("leaving_candidates").get<std::size_t>();
    ps.successors_generated = p.at("successors_generated").get<std::size_t>();
    ps.successors_skipped_by_symmetry = p.at("successors_skipped_by_symmetry").get<std::size_t>();
    ps.pruned_good = p.at("pruned_good").get<std::size_t>();
    for (std::size_t i = 1; i < kPruneReasonCount; ++i) {
      ps.pruned_infeasible[i] = p.at("pruned_infeasible").at(kReasonKeys[i]).get<std::size_t>();
    }
    ps.pruned_duplicate = p.at("pruned_duplicate").get<std::size_t>();
    ps.enqueued = p.at("enqueued").get<std::size_t>();
    s.phases.push_back(ps);
  }
  return s;
}

nlohmann::json checkpoint_json(const SearchConfig& cfg, int phase, const std::vector<Pair>& frontier,
                               const SearchStats& stats) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : frontier) {
    nlohmann::json entry = {{"graph", graph6_encode(p.graph)}, {"bag", labels_of(p.graph, p.bag)}};
    if (!p.trace.empty()) {
      nlohmann::json trace = nlohmann::json::array();
      for (const auto& b : p.trace) trace.push_back(labels_of(p.graph, b));
      entry["trace"] = std::move(trace);
    }
    pairs.push_back(std::move(entry));
  }
  return {{"schema", 1},
          {"config", config_echo(cfg)},
          {"phase", phase},
          {"frontier", pairs},
          {"seen_digest", frontier_digest(frontier)},
          {"stats", stats_json(stats)}};
}

Checkpoint checkpoint_from_json(const SearchConfig& cfg, const nlohmann::json& j) {
  Checkpoint cp;
  try {
    if (j.at("schema").get<int>() != 1) throw SearchError("unsupported checkpoint schema");
    if (j.at("config") != config_echo(cfg)) throw SearchError("checkpoint was written for a different configuration");
    cp.phase = j.at("phase").get<int>();
    for (const auto& e : j.at("frontier")) {
      Pair p;
      p.graph = graph6_decode(e.at("graph").get<std::string>(), cfg.k);
      p.bag = set_from_labels(p.graph, e.at("bag"));
      if (p.bag.size() != cfg.k + 1) throw SearchError("checkpoint bag has the wrong size");
      if (e.contains("trace")) {
        for (const auto& b : e.at("trace")) p.trace.push_back(set_from_labels(p.graph, b));
      }
      cp.frontier.push_back(std::move(p));
    }
    cp.stats = stats_from_json(j.at("stats"));
    if (frontier_digest(cp.frontier) != j.at("seen_digest").get<std::string>()) {
      throw SearchError("checkpoint digest mismatch");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SearchError(std::string("malformed checkpoint: ") + e.what());
  } catch (const GraphError& e) {
    throw SearchError(std::string("malformed checkpoint: ") + e.what());
  } catch (const MalformedGraph6& e) {
    throw SearchError(std::string("malformed checkpoint: ") + e.what());
  }
  return cp;
}

}  // namespace unavoid
