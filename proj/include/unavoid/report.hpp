#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "unavoid/containment.hpp"
#include "unavoid/search.hpp"

namespace unavoid {

inline constexpr std::string_view kVersion = "1.0.0";

// Bad input data (as opposed to bad usage): malformed graph6, impossible
// cycle ranges, unreadable files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a-b" or "a" with 3 <= a <= b.
std::pair<int, int> parse_cycle_range(std::string_view text);

// Union of the cycle range (if non-empty) and the graph6 file (if non-empty),
// deduplicated up to isomorphism.
PatternSet load_patterns(std::string_view cycles, const std::string& patterns_file, ContainmentMode mode);

namespace exit_status {
inline constexpr int kUnavoidable = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUndecided = 2;
inline constexpr int kUsage = 64;
inline constexpr int kData = 65;
inline constexpr int kSoftware = 70;
}  // namespace exit_status

int exit_code(Verdict v);

nlohmann::json adjacency_json(const LabeledGraph& g);
nlohmann::json run_report(const SearchConfig& cfg, const SearchOutcome& out, double seconds);
std::string human_report(const SearchConfig& cfg, const SearchOutcome& out, double seconds);

}  // namespace unavoid
