#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unavoid/containment.hpp"
#include "unavoid/graph.hpp"
#include "unavoid/graph_class.hpp"
#include "unavoid/symmetry.hpp"

namespace unavoid {

// A bag U with its associated graph H. H carries u-labels u1..uk, so the
// vertex entering next is index H.order() with label v(phase+1).
struct Pair {
  VertexSet bag;
  LabeledGraph graph;
  // Bags of the smooth decomposition that produced this pair, oldest first;
  // filled only when SearchConfig::record_trace is set.
  std::vector<VertexSet> trace;

  int phase() const { return graph.order() - graph.u_count(); }
};

enum class Algorithm { Base, Optimized };
// AllEnqueued keeps every key enqueued during the current phase; QueueOnly
// drops a key once its pair is popped (the literal queue-membership guard).
enum class DedupScope { AllEnqueued, QueueOnly };

std::string_view to_string(Algorithm a);
std::string_view to_string(DedupScope d);

struct PhaseStats {
  int phase = 0;
  std::size_t popped = 0;
  std::size_t group_elements = 0;  // sum of |Aut(U,H)| over popped pairs
  std::size_t completions_tested = 0;
  std::size_t completions_skipped_by_symmetry = 0;
  std::size_t completion_parity_skips = 0;  // pairs whose order rules out any member
  std::size_t leaving_candidates = 0;
  std::size_t successors_generated = 0;
  std::size_t successors_skipped_by_symmetry = 0;
  std::size_t pruned_good = 0;
  std::array<std::size_t, kPruneReasonCount> pruned_infeasible{};  // indexed by PruneReason
  std::size_t pruned_duplicate = 0;
  std::size_t enqueued = 0;
};

struct SearchStats {
  std::size_t small_order_graphs = 0;  // class members of order <= k examined
  std::vector<PhaseStats> phases;
};

enum class Verdict { Counterexample, Unavoidable, Undecided };
std::string_view to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::Undecided;
  std::optional<LabeledGraph> counterexample;
  int phase = 0;          // |counterexample| - k; <= 0 for the small-order sweep
  int max_order = 0;      // budget when Undecided
  std::vector<VertexSet> witness;  // decomposition bags of the counterexample, when traced
  SearchStats stats;
};

struct SearchConfig {
  int k = 3;
  PatternSet patterns;
  GraphClass graph_class = cubic_class();
  int max_order = 0;  // 0 means 2(k+1)
  Algorithm algorithm = Algorithm::Optimized;
  int workers = 1;
  bool use_hdf = true;
  DedupScope dedup = DedupScope::AllEnqueued;
  bool record_trace = false;
  bool small_order_sweep = true;
  std::size_t group_cap = PermGroup::kDefaultCap;

  // Called for every popped pair with its Aut(U,H) (optimized algorithm only).
  std::function<void(const Pair&, const PermGroup&)> on_group;
  // Called after each fully processed phase.
  std::function<void(const PhaseStats&, std::size_t next_frontier)> on_phase;
  // Called with the frontier of the next phase before it is processed.
  std::function<void(int phase, const std::vector<Pair>& frontier, const SearchStats&)> on_checkpoint;

  int effective_max_order() const { return max_order > 0 ? max_order : 2 * (k + 1); }
};

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument unless k >= 1 and max_order >= k+1.
void validate_config(const SearchConfig& cfg);

Pair initial_pair(int k);

// First H+E' (E' inside the bag) in the class and outside super(patterns),
// enumerating E' by size then lexicographically and skipping the Aut(U,H)
// orbit of every rejected E'. Pass the trivial group to disable pruning.
std::optional<LabeledGraph> check_completions(const Pair& p, const SearchConfig& cfg, const PermGroup& grp,
                                              PhaseStats* stats = nullptr);

// Leaving vertices to branch on: the hdf choice for regular-degree-3 classes
// when a bag vertex has degree >= 2, otherwise one minimum-label vertex per
// orbit on the bag.
std::vector<int> leaving_candidates(const Pair& p, const PermGroup& grp, const SearchConfig& cfg);

// Successor pairs when u leaves, one per Y modulo the stabiliser of u, that
// are neither good nor infeasible. Not deduplicated across calls.
std::vector<Pair> successors(const Pair& p, int u, const PermGroup& grp, const SearchConfig& cfg,
                             PhaseStats* stats = nullptr);

// Optimized search with strict phase-ordered processing.
SearchOutcome run_search(const SearchConfig& cfg);
// Base search: every leaving vertex and every Y, no symmetry pruning, no
// deduplication.
SearchOutcome run_search_base(const SearchConfig& cfg);
// Dispatches on cfg.algorithm.
SearchOutcome run(const SearchConfig& cfg);

// Class members of order <= max_order up to isomorphism, smallest first,
// generated by vertex extension.
std::vector<LabeledGraph> small_class_members(const GraphClass& c, int max_order);

// Checkpoints: the frontier of the phase about to be processed plus the
// configuration echo and statistics so far.
nlohmann::json config_echo(const SearchConfig& cfg);
nlohmann::json checkpoint_json(const SearchConfig& cfg, int phase, const std::vector<Pair>& frontier,
                               const SearchStats& stats);
struct Checkpoint {
  int phase = 0;
  std::vector<Pair> frontier;
  SearchStats stats;
};
// Throws SearchError when the echo does not match cfg or the data is malformed.
Checkpoint checkpoint_from_json(const SearchConfig& cfg, const nlohmann::json& j);
// Continues a run from a checkpoint with the optimized algorithm.
SearchOutcome resume_search(const SearchConfig& cfg, const Checkpoint& cp);

nlohmann::json stats_json(const SearchStats& s);
SearchStats stats_from_json(const nlohmann::json& j);

}  // namespace unavoid
