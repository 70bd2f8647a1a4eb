#include "unavoid/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "unavoid/graph6.hpp"

namespace unavoid {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::pair<int, int> parse_cycle_range(std::string_view text) {
  auto dash = text.find('-');
  int a = parse_int(text.substr(0, dash));
  int b = dash == std::string_view::npos ? a : parse_int(text.substr(dash + 1));
  if (a < 3) throw DataError("cycle lengths start at 3");
  if (b < a) throw DataError("empty cycle range " + std::string(text));
  if (b > LabeledGraph::kMaxOrder) throw DataError("cycle length too large");
  return {a, b};
}

PatternSet load_patterns(std::string_view cycles, const std::string& patterns_file, ContainmentMode mode) {
  std::vector<LabeledGraph> graphs;
  if (!cycles.empty()) {
    auto [a, b] = parse_cycle_range(cycles);
    for (int len = a; len <= b; ++len) graphs.push_back(cycle_graph(len));
  }
  if (!patterns_file.empty()) {
    std::ifstream in(patterns_file);
    if (!in) throw DataError("cannot read pattern file " + patterns_file);
    try {
      for (auto& g : graph6_read_all(in)) graphs.push_back(std::move(g));
    } catch (const MalformedGraph6& e) {
      throw DataError(patterns_file + ": " + e.what());
    }
  }
  try {
    return PatternSet(std::move(graphs), mode);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Unavoidable:
      return exit_status::kUnavoidable;
    case Verdict::Counterexample:
      return exit_status::kCounterexample;
    case Verdict::Undecided:
      return exit_status::kUndecided;
  }
  return exit_status::kSoftware;
}

nlohmann::json adjacency_json(const LabeledGraph& g) {
  nlohmann::json adj = nlohmann::json::object();
  for (int v = 0; v < g.order(); ++v) {
    nlohmann::json nb = nlohmann::json::array();
    for (int w : g.neighbours(v)) nb.push_back(g.label(w));
    adj[g.label(v)] = std::move(nb);
  }
  return adj;
}

nlohmann::json run_report(const SearchConfig& cfg, const SearchOutcome& out, double seconds) {
  nlohmann::json j = {{"schema", 1},
                      {"version", std::string(kVersion)},
                      {"config", config_echo(cfg)},
                      {"verdict", std::string(to_string(out.verdict))},
                      {"stats", stats_json(out.stats)},
                      {"seconds", seconds}};
  j["config"]["workers"] = cfg.workers;
  if (out.counterexample) {
    const LabeledGraph& g = *out.counterexample;
    nlohmann::json cex = {{"graph6", graph6_encode(g)},
                          {"order", g.order()},
                          {"phase", out.phase},
                          {"adjacency", adjacency_json(g)}};
    if (!out.witness.empty()) {
      nlohmann::json bags = nlohmann::json::array();
      for (const auto& b : out.witness) {
        nlohmann::json labels = nlohmann::json::array();
        for (int v : b) labels.push_back(g.label(v));
        bags.push_back(std::move(labels));
      }
      cex["decomposition"] = std::move(bags);
    }
    j["counterexample"] = std::move(cex);
  }
  if (out.verdict == Verdict::Undecided) j["max_order"] = out.max_order;
  return j;
}

std::string human_report(const SearchConfig& cfg, const SearchOutcome& out, double seconds) {
  std::ostringstream os;
  os << "k=" << cfg.k << " class=" << cfg.graph_class.name << " patterns=" << cfg.patterns.size() << " ("
     << to_string(cfg.patterns.mode()) << ") max-order=" << cfg.effective_max_order() << "\n";
  os << "verdict: " << to_string(out.verdict);
  if (out.counterexample) {
    os << " order=" << out.counterexample->order() << " phase=" << out.phase << "\n";
    os << "graph6: " << graph6_encode(*out.counterexample) << "\n";
    const LabeledGraph& g = *out.counterexample;
    for (int v = 0; v < g.order(); ++v) {
      os << "  " << g.label(v) << ":";
      for (int w : g.neighbours(v)) os << ' ' << g.label(w);
      os << "\n";
    }
  } else if (out.verdict == Verdict::Undecided) {
    os << " (no verdict up to order " << out.max_order << ")\n";
  } else {
    os << "\n";
  }
  std::size_t popped = 0;
  for (const auto& p : out.stats.phases) popped += p.popped;
  os << "pairs expanded: " << popped << " over " << out.stats.phases.size() << " phases, " << seconds << " s\n";
  return os.str();
}

}  // namespace unavoid
