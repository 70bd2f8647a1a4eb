// Command-line driver: check, pathwidth, hdf, selftest.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unavoid/decomposition.hpp"
#include "unavoid/graph6.hpp"
#include "unavoid/named_graphs.hpp"
#include "unavoid/report.hpp"
#include "unavoid/search.hpp"

using namespace unavoid;
namespace fs = std::filesystem;

namespace {

constexpr const char* kCheckpointEnv = "UNAVOID_CHECKPOINT_DIR";

struct CheckOptions {
  int k = 3;
  std::string cycles;
  std::string patterns_file;
  std::string mode = "subgraph";
  std::string graph_class = "cubic";
  int max_order = 0;
  std::string algorithm = "optimized";
  int workers = 1;
  std::string json_path;
  bool no_hdf = false;
  std::string dedup = "all-enqueued";
  bool checkpoint = false;
  std::string resume;
  bool trace = false;
  bool quiet = false;
};

struct GraphInput {
  std::string input;
  std::string name;
};

std::vector<LabeledGraph> load_graphs(const GraphInput& in) {
  if (!in.name.empty()) {
    try {
      return {named::by_name(in.name)};
    } catch (const GraphError& e) {
      throw DataError(e.what());
    }
  }
  if (in.input.empty()) throw CLI::ValidationError("--input or --graph is required");
  std::ifstream f(in.input);
  if (!f) throw DataError("cannot read " + in.input);
  try {
    auto graphs = graph6_read_all(f);
    if (graphs.empty()) throw DataError(in.input + " contains no graphs");
    return graphs;
  } catch (const MalformedGraph6& e) {
    throw DataError(in.input + ": " + e.what());
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << j.dump(2) << "\n";
}

SearchConfig build_config(const CheckOptions& o) {
  SearchConfig cfg;
  cfg.k = o.k;
  if (o.cycles.empty() && o.patterns_file.empty()) throw CLI::ValidationError("give --cycles and/or --patterns");
  ContainmentMode mode;
  try {
    mode = parse_containment_mode(o.mode);
    cfg.graph_class = parse_graph_class(o.graph_class);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
  cfg.patterns = load_patterns(o.cycles, o.patterns_file, mode);
  cfg.max_order = o.max_order;
  if (o.algorithm == "optimized") cfg.algorithm = Algorithm::Optimized;
  else if (o.algorithm == "base") cfg.algorithm = Algorithm::Base;
  else throw CLI::ValidationError("--algorithm must be base or optimized");
  if (o.dedup == "all-enqueued") cfg.dedup = DedupScope::AllEnqueued;
  else if (o.dedup == "queue-only") cfg.dedup = DedupScope::QueueOnly;
  else throw CLI::ValidationError("--dedup must be all-enqueued or queue-only");
  cfg.workers = o.workers;
  cfg.use_hdf = !o.no_hdf;
  cfg.record_trace = o.trace;
  try {
    validate_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
  return cfg;
}

int run_check(const CheckOptions& o) {
  SearchConfig cfg = build_config(o);
  if (!o.quiet) {
    cfg.on_phase = [](const PhaseStats& ps, std::size_t next) {
      std::size_t infeasible = 0;
      for (auto c : ps.pruned_infeasible) infeasible += c;
      std::cerr << "phase " << ps.phase << ": popped " << ps.popped << ", next frontier " << next << ", pruned good "
                << ps.pruned_good << ", infeasible " << infeasible << ", duplicate " << ps.pruned_duplicate << "\n";
    };
  }
  std::optional<fs::path> checkpoint_dir;
  if (o.checkpoint) {
    const char* dir = std::getenv(kCheckpointEnv);
    if (!dir || !*dir) throw CLI::ValidationError(std::string("--checkpoint needs ") + kCheckpointEnv + " to be set");
    checkpoint_dir = fs::path(dir);
    fs::create_directories(*checkpoint_dir);
    cfg.on_checkpoint = [&cfg, dir = *checkpoint_dir](int phase, const std::vector<Pair>& frontier, const SearchStats& stats) {
      auto j = checkpoint_json(cfg, phase, frontier, stats);
      std::string name = "phase-" + std::to_string(phase) + ".json";
      std::ofstream(dir / name) << j.dump() << "\n";
      std::ofstream(dir / "latest.json") << j.dump() << "\n";
    };
  }

  auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (!o.resume.empty()) {
    std::ifstream in(o.resume);
    if (!in) throw DataError("cannot read checkpoint " + o.resume);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed checkpoint: ") + e.what());
    }
    Checkpoint cp;
    try {
      cp = checkpoint_from_json(cfg, j);
    } catch (const SearchError& e) {
      throw DataError(e.what());
    }
    out = resume_search(cfg, cp);
  } else {
    out = run(cfg);
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // With --json - stdout carries only the JSON document.
  (o.json_path == "-" ? std::cerr : std::cout) << human_report(cfg, out, seconds);
  if (!o.json_path.empty()) write_json(o.json_path, run_report(cfg, out, seconds));
  return exit_code(out.verdict);
}

int run_pathwidth(const GraphInput& in, bool show_bags, const std::string& json_path) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& g : load_graphs(in)) {
    PathwidthResult r;
    try {
      r = pathwidth_exact(g);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
    std::cout << r.width << "\n";
    if (show_bags) {
      for (const auto& bag : r.decomposition.bags) {
        std::cout << " ";
        for (int v : bag) std::cout << ' ' << g.label(v);
        std::cout << "\n";
      }
    }
    auto j = to_json(g, r.decomposition);
    j["graph6"] = graph6_encode(g);
    all.push_back(std::move(j));
  }
  if (!json_path.empty()) write_json(json_path, all.size() == 1 ? all[0] : all);
  return 0;
}

int run_hdf(const GraphInput& in, const std::string& decomposition_path, const std::string& json_path) {
  auto graphs = load_graphs(in);
  if (graphs.size() != 1) throw DataError("hdf expects exactly one graph");
  const LabeledGraph& g = graphs.front();
  PathDecomposition d;
  try {
    if (decomposition_path.empty()) {
      d = pathwidth_exact(g).decomposition;
    } else {
      std::ifstream f(decomposition_path);
      if (!f) throw DataError("cannot read " + decomposition_path);
      d = decomposition_from_json(g, nlohmann::json::parse(f));
    }
    PathDecomposition h = make_hdf(g, d);
    auto j = to_json(g, h);
    j["hdf"] = is_hdf(g, h);
    if (json_path.empty()) std::cout << j.dump(2) << "\n";
    else write_json(json_path, j);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed decomposition: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  return 0;
}

// Base against optimized search, and hdf on against off, on small cubic runs.
int run_selftest(int max_budget) {
  int failures = 0;
  for (int k : {3, 4}) {
    for (int upto : {0, 3, 4}) {
      for (int budget = k + 1; budget <= max_budget; ++budget) {
        SearchConfig cfg;
        cfg.k = k;
        cfg.max_order = budget;
        if (upto) cfg.patterns = PatternSet::cycles(3, upto);
        SearchOutcome base = run_search_base(cfg);
        SearchOutcome opt = run_search(cfg);
        SearchConfig plain = cfg;
        plain.use_hdf = false;
        SearchOutcome no_hdf = run_search(plain);
        auto same = [](const SearchOutcome& a, const SearchOutcome& b) {
          if (a.verdict != b.verdict) return false;
          if (!a.counterexample) return true;
          return canonical_key(*a.counterexample, VertexColoring::uniform(a.counterexample->order())) ==
                 canonical_key(*b.counterexample, VertexColoring::uniform(b.counterexample->order()));
        };
        bool ok = same(base, opt) && same(opt, no_hdf);
        std::cout << (ok ? "ok  " : "FAIL") << " k=" << k << " patterns=C3..C" << upto << " max-order=" << budget
                  << " verdict=" << to_string(opt.verdict) << "\n";
        if (!ok) ++failures;
      }
    }
  }
  std::cout << (failures ? "selftest failed\n" : "selftest passed\n");
  return failures ? exit_status::kSoftware : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unavoidable pattern search over bounded path-width graph classes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CheckOptions co;
  auto* check = app.add_subcommand("check", "Decide whether a pattern set is unavoidable");
  check->add_option("--k", co.k, "Path-width bound")->required();
  check->add_option("--cycles", co.cycles, "Cycle patterns a-b or a");
  check->add_option("--patterns", co.patterns_file, "graph6 file with one pattern per line");
  check->add_option("--mode", co.mode, "subgraph, induced or minor")->capture_default_str();
  check->add_option("--class", co.graph_class, "cubic or cubic-girth-ge:<g>")->capture_default_str();
  check->add_option("--max-order", co.max_order, "Largest |H| to explore (default 2(k+1))");
  check->add_option("--algorithm", co.algorithm, "base or optimized")->capture_default_str();
  check->add_option("--workers", co.workers, "Worker threads")->capture_default_str();
  check->add_option("--json", co.json_path, "Write the JSON report here ('-' for stdout)");
  check->add_flag("--no-hdf", co.no_hdf, "Branch on orbit representatives only");
  check->add_option("--dedup", co.dedup, "all-enqueued or queue-only")->capture_default_str();
  check->add_flag("--checkpoint", co.checkpoint, std::string("Write per-phase checkpoints to $") + kCheckpointEnv);
  check->add_option("--resume", co.resume, "Continue from a checkpoint file");
  check->add_flag("--trace", co.trace, "Record decompositions (reported with counterexamples)");
  check->add_flag("--quiet", co.quiet, "No per-phase progress on stderr");

  GraphInput pw_in;
  bool pw_bags = false;
  std::string pw_json;
  auto* pw = app.add_subcommand("pathwidth", "Exact path-width of graph6 graphs");
  pw->add_option("--input", pw_in.input, "graph6 file");
  pw->add_option("--graph", pw_in.name, "Named graph (k33, cube, petersen, ...)");
  pw->add_flag("--bags", pw_bags, "Print a smooth decomposition");
  pw->add_option("--json", pw_json, "Write decompositions as JSON");

  GraphInput hdf_in;
  std::string hdf_decomposition, hdf_json;
  auto* hdf = app.add_subcommand("hdf", "Turn a smooth decomposition into a high-degree-first one");
  hdf->add_option("--input", hdf_in.input, "graph6 file with one graph");
  hdf->add_option("--graph", hdf_in.name, "Named graph");
  hdf->add_option("--decomposition", hdf_decomposition, "JSON decomposition (default: exact solver output)");
  hdf->add_option("--json", hdf_json, "Output path");

  int self_budget = 8;
  auto* self = app.add_subcommand("selftest", "Differential check of the two algorithms");
  self->add_option("--max-order", self_budget, "Largest budget in the grid")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_status::kUsage;
  }

  try {
    if (*check) return run_check(co);
    if (*pw) return run_pathwidth(pw_in, pw_bags, pw_json);
    if (*hdf) return run_hdf(hdf_in, hdf_decomposition, hdf_json);
    if (*self) return run_selftest(self_budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_status::kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return exit_status::kData;
  } catch (const SearchError& e) {
    std::cerr << "search error: " << e.what() << "\n";
    return exit_status::kSoftware;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status::kSoftware;
  }
  return exit_status::kUsage;
}
