#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unavoid/graph.hpp"

namespace unavoid::named {

LabeledGraph k33();
LabeledGraph cube();
LabeledGraph twisted_cube();
LabeledGraph petersen();
LabeledGraph heawood();
LabeledGraph pappus();
LabeledGraph mcgee();
LabeledGraph tutte_coxeter();

// The six reduction configurations for cubic path-width-3 girth-4 graphs.
// `index` is 1..6.
LabeledGraph reduction_pattern(int index);

// Lookup by name ("k33", "cube", "twisted-cube", "petersen", "heawood",
// "pappus", "mcgee", "tutte-coxeter"); throws GraphError for unknown names.
LabeledGraph by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace unavoid::named
