#include "unavoid/graph6.hpp"

namespace unavoid {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw MalformedGraph6(std::string("invalid graph6 character '") + c + "'");
  }
  return v;
}

}  // namespace

std::string graph6_encode(const LabeledGraph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int bits = 0;
  int acc = 0;
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

LabeledGraph graph6_decode(std::string_view text, int u_count) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw MalformedGraph6("graph6 orders above 258047 are not supported");
    }
    if (text.size() < 4) throw MalformedGraph6("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
    if (n <= 62) throw MalformedGraph6("non-canonical graph6 size field");
  }
  if (n > LabeledGraph::kMaxOrder) {
    throw MalformedGraph6("graph6 order " + std::to_string(n) + " exceeds supported maximum " +
                          std::to_string(LabeledGraph::kMaxOrder));
  }
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) {
    throw MalformedGraph6("graph6 length " + std::to_string(text.size()) + " does not match order " +
                          std::to_string(n) + " (expected " + std::to_string(expected) + ")");
  }
  if (u_count < 0 || u_count > n) throw MalformedGraph6("u-label count exceeds decoded order");

  LabeledGraph g(n, u_count);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int c = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((c >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    int last = sextet(text.back());
    int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1)) throw MalformedGraph6("non-zero graph6 padding bits");
  }
  return g;
}

std::vector<LabeledGraph> graph6_read_all(std::istream& in) {
  std::vector<LabeledGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view body = line;
    if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty()) continue;
    out.push_back(graph6_decode(body));
  }
  return out;
}

}  // namespace unavoid
