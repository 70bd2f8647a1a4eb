// Acceptance run: one PASS/FAIL line per criterion. `--long` adds the
// Tutte-Coxeter path-width, which takes minutes.

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unavoid/decomposition.hpp"
#include "unavoid/graph6.hpp"
#include "unavoid/named_graphs.hpp"
#include "unavoid/search.hpp"

using namespace unavoid;
using namespace unavoid::named;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

LabeledGraph reference(const std::string& name) {
  std::ifstream in(std::string(UNAVOID_DATA_DIR) + "/" + name + ".g6");
  std::string line;
  std::getline(in, line);
  return graph6_decode(line);
}

std::string key(const LabeledGraph& g) { return canonical_key(g, VertexColoring::uniform(g.order())); }

SearchConfig cycles_config(int k, int a, int b) {
  SearchConfig cfg;
  cfg.k = k;
  cfg.patterns = PatternSet::cycles(a, b);
  cfg.max_order = 20;
  return cfg;
}

struct Row {
  int k, a, b;
  Verdict verdict;
  const char* match;  // reference graph for counterexamples
  int order;
};

// Shared with criterion 8.
std::vector<std::pair<Row, SearchOutcome>> table_results;

void run_rows(Criterion& c, const std::vector<Row>& rows,
              const std::function<void(const Pair&, const PermGroup&)>& on_group = nullptr) {
  for (const auto& row : rows) {
    auto cfg = cycles_config(row.k, row.a, row.b);
    cfg.on_group = on_group;
    auto out = run(cfg);
    std::ostringstream tag;
    tag << "k=" << row.k << " C" << row.a << "..C" << row.b;
    c.expect(out.verdict == row.verdict, tag.str() + ": verdict " + std::string(to_string(out.verdict)));
    if (row.match) {
      bool iso = out.counterexample && key(*out.counterexample) == key(reference(row.match));
      c.expect(iso, tag.str() + ": counterexample is not " + row.match);
      c.expect(out.counterexample && out.counterexample->order() == row.order, tag.str() + ": wrong order");
      c.expect(out.phase == row.order - row.k, tag.str() + ": wrong phase");
    }
    table_results.emplace_back(row, std::move(out));
  }
}

std::size_t groups_checked = 0;

void criterion1(Criterion& c) {
  run_rows(c,
           {{3, 3, 3, Verdict::Counterexample, "k33", 6},
            {3, 3, 4, Verdict::Unavoidable, nullptr, 0},
            {4, 3, 4, Verdict::Unavoidable, nullptr, 0},
            {5, 3, 4, Verdict::Counterexample, "petersen", 10},
            {5, 3, 5, Verdict::Unavoidable, nullptr, 0}},
           [&](const Pair&, const PermGroup& g) {
             // Orbit-stabiliser identity, used by criterion 7.
             for (int v = 0; v < g.degree(); ++v) {
               if (g.orbit(v).size() * g.stabilizer(v).order() != g.order()) {
                 c.failures.push_back("orbit-stabiliser identity fails");
               }
             }
             ++groups_checked;
           });
}

void criterion2(Criterion& c) {
  run_rows(c, {{6, 3, 5, Verdict::Counterexample, "heawood", 14},
               {6, 3, 6, Verdict::Unavoidable, nullptr, 0},
               {7, 3, 6, Verdict::Unavoidable, nullptr, 0}});
}

void criterion3(Criterion& c) {
  struct Shape {
    int order, edges, d1, d2, d3;
  };
  const Shape shapes[] = {{9, 12, 0, 3, 6},  {8, 10, 1, 2, 5},  {11, 15, 0, 3, 8},
                          {10, 13, 1, 2, 7}, {10, 13, 2, 0, 8}, {10, 13, 2, 0, 8}};
  std::vector<LabeledGraph> patterns{k33()};
  for (int i = 1; i <= 6; ++i) {
    auto g = reduction_pattern(i);
    int d[8] = {};
    for (int v = 0; v < g.order(); ++v) ++d[g.degree(v)];
    const auto& s = shapes[i - 1];
    bool ok = g.order() == s.order && g.edge_count() == s.edges && d[1] == s.d1 && d[2] == s.d2 && d[3] == s.d3 &&
              g.max_degree() <= 3;
    c.expect(ok, "G" + std::to_string(i) + " transcription shape");
    patterns.push_back(std::move(g));
  }
  SearchConfig cfg;
  cfg.k = 3;
  cfg.graph_class = parse_graph_class("cubic-girth-ge:4");
  cfg.patterns = PatternSet(patterns, ContainmentMode::Subgraph);
  cfg.max_order = 30;
  auto out = run(cfg);
  c.expect(cfg.patterns.size() == 7, "seven distinct patterns");
  c.expect(out.verdict == Verdict::Unavoidable, "verdict " + std::string(to_string(out.verdict)));
}

void check_widths(Criterion& c, const std::vector<std::pair<const char*, int>>& expected) {
  for (auto [name, w] : expected) {
    int got = pathwidth_exact(reference(name)).width;
    c.expect(got == w, std::string(name) + " path-width " + std::to_string(got));
  }
}

void criterion4(Criterion& c) {
  check_widths(c, {{"k33", 3}, {"cube", 4}, {"petersen", 5}, {"heawood", 6}, {"pappus", 7}, {"mcgee", 8}});
  int tc = pathwidth_exact(twisted_cube()).width;
  c.expect(tc == 4, "twisted cube path-width " + std::to_string(tc));
}

void criterion5(Criterion& c) {
  for (auto [name, g] : std::vector<std::pair<const char*, int>>{
           {"k33", 4}, {"petersen", 5}, {"heawood", 6}, {"pappus", 6}, {"mcgee", 7}, {"tutte-coxeter", 8}}) {
    auto got = girth(reference(name));
    c.expect(got == g, std::string(name) + " girth");
    c.expect(girth(by_name(name)) == g, std::string(name) + " girth (built-in)");
  }
}

void criterion6(Criterion& c) {
  for (int k : {3, 4}) {
    for (auto [a, b] : {std::pair{0, 0}, std::pair{3, 3}, std::pair{3, 4}}) {
      for (int budget = k + 1; budget <= 10; ++budget) {
        SearchConfig cfg;
        cfg.k = k;
        cfg.patterns = a ? PatternSet::cycles(a, b) : PatternSet({}, ContainmentMode::Subgraph);
        cfg.max_order = budget;
        auto opt = run_search(cfg);
        auto base = run_search_base(cfg);
        auto off = cfg;
        off.use_hdf = false;
        auto nohdf = run_search(off);
        std::ostringstream tag;
        tag << "k=" << k << " C" << a << "..C" << b << " budget " << budget;
        auto cls = [](const SearchOutcome& o) { return o.counterexample ? key(*o.counterexample) : std::string(); };
        c.expect(base.verdict == opt.verdict && cls(base) == cls(opt), tag.str() + ": base differs");
        c.expect(nohdf.verdict == opt.verdict && cls(nohdf) == cls(opt), tag.str() + ": hdf shortcut differs");
      }
    }
  }
}

void criterion7(Criterion& c) {
  c.expect(groups_checked > 0, "no groups recorded in criterion 1");

  std::mt19937 rng(20240601);
  for (int t = 0; t < 100; ++t) {
    int n = 6 + t % 14;
    auto g = oracle::random_connected_subcubic(rng, n);
    auto layout = oracle::random_permutation(rng, n);
    int w = std::min(std::max(vertex_separation(g, layout), 1), n - 1);
    auto d = layout_to_smooth(g, layout, w);
    auto h = make_hdf(g, d);
    bool ok = validate(g, h, w).smooth() && is_hdf(g, h) && make_hdf(g, h) == h;
    c.expect(ok, "make_hdf case " + std::to_string(t));
  }

  for (int t = 0; t < 500; ++t) {
    int n = 1 + t % 12;
    auto g = oracle::random_graph(rng, n, 0.15 + 0.1 * (t % 5));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colors[v] = v % (1 + t % 3);
    auto other = oracle::random_graph(rng, n, 0.15 + 0.1 * (t % 5));
    auto perm = oracle::random_permutation(rng, n);
    auto moved = oracle::relabel(g, perm);
    std::vector<int> moved_colors(colors.size());
    for (int v = 0; v < n; ++v) moved_colors[perm[v]] = colors[v];
    VertexColoring cg(colors), cm(moved_colors);
    c.expect(canonical_key(g, cg) == canonical_key(moved, cm), "canonical key not invariant, case " + std::to_string(t));
    bool iso = oracle::isomorphic(g, colors, other, colors);
    c.expect(iso == (canonical_key(g, cg) == canonical_key(other, cg)),
             "canonical key vs brute force, case " + std::to_string(t));
  }

  for (const auto& g : oracle::connected_graphs(7)) {
    if (pathwidth_exact(g).width != oracle::pathwidth_by_orderings(g)) {
      c.failures.push_back("path-width mismatch on " + graph6_encode(g));
    }
  }
}

void criterion8(Criterion& c) {
  // xi(k) = max girth over cubic graphs of path-width k. A counterexample to
  // C3..C(g) of path-width exactly k gives xi(k) >= g+1; unavoidability of
  // C3..C(g) gives xi(k) <= g.
  std::map<int, int> lower, upper;
  for (const auto& [row, out] : table_results) {
    if (out.verdict == Verdict::Unavoidable) {
      upper[row.k] = upper.count(row.k) ? std::min(upper[row.k], row.b) : row.b;
    } else if (out.counterexample && pathwidth_exact(*out.counterexample).width == row.k) {
      lower[row.k] = std::max(lower[row.k], *girth(*out.counterexample));
    }
  }
  lower[4] = std::max(lower[4], pathwidth_exact(cube()).width == 4 ? *girth(cube()) : 0);
  for (auto [k, xi] : std::vector<std::pair<int, int>>{{3, 4}, {4, 4}, {5, 5}, {6, 6}}) {
    c.expect(lower[k] == xi && upper[k] == xi, "xi(" + std::to_string(k) + ") not certified");
  }
}

void criterion_long(Criterion& c) { check_widths(c, {{"tutte-coxeter", 9}}); }

}  // namespace

int main(int argc, char** argv) {
  bool long_run = argc > 1 && std::strcmp(argv[1], "--long") == 0;
  struct Entry {
    const char* id;
    const char* title;
    void (*body)(Criterion&);
  };
  std::vector<Entry> entries{
      {"1", "cubic table rows k=3..5 (K3,3 and Petersen counterexamples)", criterion1},
      {"2", "cubic table rows k=6..7 (Heawood counterexample)", criterion2},
      {"3", "{K3,3, G1..G6} unavoidable for cubic girth >= 4, k=3", criterion3},
      {"4", "path-width of K3,3, cube, twisted cube, Petersen, Heawood, Pappus, McGee", criterion4},
      {"5", "girth of K3,3, Petersen, Heawood, Pappus, McGee, Tutte-Coxeter", criterion5},
      {"6", "base vs optimized and hdf on vs off, k=3,4, budgets up to 10", criterion6},
      {"7", "invariant suites (orbit-stabiliser, make_hdf, canonical form, path-width)", criterion7},
      {"8", "scope: xi(3)=xi(4)=4, xi(5)=5, xi(6)=6 certified; asymptotic bounds not attempted", criterion8},
  };
  if (long_run) entries.push_back({"L", "Tutte-Coxeter path-width 9", criterion_long});

  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << e.id << ": " << e.title << "  (" << std::fixed
              << std::setprecision(2) << s << " s)\n";
    for (const auto& f : c.failures) std::cout << "      " << f << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
