#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unavoid/graph.hpp"

namespace unavoid {

class MalformedGraph6 : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 encoding (header-less). Orders up to 62 use the one-byte size field,
// larger orders the four-byte form.
std::string graph6_encode(const LabeledGraph& g);

// Decodes one graph6 line (a trailing '\n' or "\r\n" is tolerated). Vertex i
// receives index i; `u_count` of them are treated as u-labels.
LabeledGraph graph6_decode(std::string_view text, int u_count = 0);

// Reads every non-empty line of a stream; the optional ">>graph6<<" header is
// skipped.
std::vector<LabeledGraph> graph6_read_all(std::istream& in);

}  // namespace unavoid
