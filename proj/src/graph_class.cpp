#include "unavoid/graph_class.hpp"

#include <charconv>
#include <stdexcept>

namespace unavoid {

std::string_view to_string(PruneReason r) {
  switch (r) {
    case PruneReason::None:
      return "none";
    case PruneReason::DegreeTooHigh:
      return "degree_too_high";
    case PruneReason::FinishedVertexDeficient:
      return "finished_vertex_deficient";
    case PruneReason::Parity:
      return "parity";
    case PruneReason::GirthFloor:
      return "girth_floor";
  }
  return "none";
}

GraphClass cubic_class() {
  GraphClass c;
  c.name = "cubic";
  c.regular_degree = 3;
  c.max_degree = 3;
  c.membership = [](const LabeledGraph& g) {
    if (g.order() == 0) return false;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) return false;
    }
    return true;
  };
  c.feasibility = [](const VertexSet& bag, const LabeledGraph& h) {
    int deficit = 0;
    for (int v = 0; v < h.order(); ++v) {
      int d = h.degree(v);
      if (d > 3) return PruneReason::DegreeTooHigh;
      if (!bag.contains(v) && d < 3) return PruneReason::FinishedVertexDeficient;
      deficit += 3 - d;
    }
    // Degree sum parity of any cubic supergraph; implied by the two rules
    // above but kept as an explicit guard.
    if ((deficit - h.order()) % 2 != 0) return PruneReason::Parity;
    return PruneReason::None;
  };
  return c;
}

GraphClass restricted_class(GraphClass base, std::string name, std::function<bool(const LabeledGraph&)> extra) {
  auto inner = std::move(base.membership);
  base.membership = [inner = std::move(inner), extra = std::move(extra)](const LabeledGraph& g) {
    return inner(g) && extra(g);
  };
  base.name = std::move(name);
  return base;
}

GraphClass with_girth_floor(GraphClass base, int g) {
  if (g < 3) throw std::invalid_argument("girth floor must be at least 3");
  std::string name = base.name + "-girth-ge:" + std::to_string(g);
  GraphClass c = restricted_class(std::move(base), std::move(name), [g](const LabeledGraph& h) {
    return !has_cycle_at_most(h, g - 1);
  });
  auto inner = std::move(c.feasibility);
  c.feasibility = [inner = std::move(inner), g](const VertexSet& bag, const LabeledGraph& h) {
    PruneReason r = inner(bag, h);
    if (r != PruneReason::None) return r;
    return has_cycle_at_most(h, g - 1) ? PruneReason::GirthFloor : PruneReason::None;
  };
  return c;
}

GraphClass parse_graph_class(std::string_view text) {
  if (text == "cubic") return cubic_class();
  constexpr std::string_view prefix = "cubic-girth-ge:";
  if (text.starts_with(prefix)) {
    std::string_view digits = text.substr(prefix.size());
    int g = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), g);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() && g >= 3) {
      return with_girth_floor(cubic_class(), g);
    }
  }
  throw std::invalid_argument("unknown graph class '" + std::string(text) +
                              "' (expected cubic or cubic-girth-ge:<g> with g >= 3)");
}

}  // namespace unavoid
