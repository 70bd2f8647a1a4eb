#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unavoid/graph.hpp"

namespace unavoid {

enum class ContainmentMode { Subgraph, Induced, Minor };

std::string_view to_string(ContainmentMode m);
// Throws std::invalid_argument for anything but "subgraph", "induced", "minor".
ContainmentMode parse_containment_mode(std::string_view s);

class PatternSet {
 public:
  PatternSet() = default;
  // Drops isomorphic duplicates and sorts by (order, edge count). Throws
  // std::invalid_argument on an order-0 pattern.
  PatternSet(std::vector<LabeledGraph> patterns, ContainmentMode mode);

  // {C_a, ..., C_b}
  static PatternSet cycles(int a, int b, ContainmentMode mode = ContainmentMode::Subgraph);

  ContainmentMode mode() const { return mode_; }
  const std::vector<LabeledGraph>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  // L when the set is exactly {C_3, ..., C_L}.
  std::optional<int> short_cycle_bound() const { return cycle_bound_; }

 private:
  std::vector<LabeledGraph> patterns_;
  ContainmentMode mode_ = ContainmentMode::Subgraph;
  std::optional<int> cycle_bound_;
};

bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern);
bool contains_induced(const LabeledGraph& host, const LabeledGraph& pattern);
bool contains_minor(const LabeledGraph& host, const LabeledGraph& pattern);
bool contains(const LabeledGraph& host, const LabeledGraph& pattern, ContainmentMode mode);

// host ∈ super(patterns) in the set's mode.
bool in_super(const LabeledGraph& host, const PatternSet& ps);

// Good-pair test: subgraph mode tests h, induced mode tests h − bag as a plain
// subgraph (vertices outside the bag are finished, so any copy there is
// induced), minor mode tests h for a minor.
bool pair_is_good(const LabeledGraph& h, const VertexSet& bag, const PatternSet& ps);

// Thread-safe memo of canonical key -> containment answer.
class ContainmentCache {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool value);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, bool> map_;
  mutable std::size_t hits_ = 0;
};

// pair_is_good backed by a cache; the fast cycle path bypasses the cache.
bool pair_is_good_cached(const LabeledGraph& h, const VertexSet& bag, const PatternSet& ps,
                         ContainmentCache& cache);

}  // namespace unavoid
