#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "unavoid/graph.hpp"

namespace unavoid {

// Why a pair was ruled out by the class; None means it may still extend to a
// class member.
enum class PruneReason { None, DegreeTooHigh, FinishedVertexDeficient, Parity, GirthFloor };
inline constexpr std::size_t kPruneReasonCount = 5;

std::string_view to_string(PruneReason r);

struct GraphClass {
  std::string name;
  std::function<bool(const LabeledGraph&)> membership;
  // Must only report a reason when no member contains (bag, h).
  std::function<PruneReason(const VertexSet& bag, const LabeledGraph& h)> feasibility;
  // Set when every member is d-regular; enables degree-targeted enumeration of
  // completions and successor edges.
  std::optional<int> regular_degree;
  // Upper bound on member degrees, if any; used by the small-order sweep.
  std::optional<int> max_degree;
};

GraphClass cubic_class();

// Membership gains `extra`; feasibility is inherited unchanged.
GraphClass restricted_class(GraphClass base, std::string name, std::function<bool(const LabeledGraph&)> extra);

// Members additionally have girth >= g. Short cycles never disappear when
// edges or vertices are added, so feasibility rejects them as well.
GraphClass with_girth_floor(GraphClass base, int g);

// "cubic" or "cubic-girth-ge:<g>"; throws std::invalid_argument otherwise.
GraphClass parse_graph_class(std::string_view text);

}  // namespace unavoid
