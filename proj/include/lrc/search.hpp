#pragma once

#include <cstdint>
#include <vector>

#include "lrc/analyze.hpp"

namespace lrc {

struct SearchOptions {
  int r = 2;
  bool require_locality = false;
  std::uint64_t budget = std::uint64_t{1} << 28;  // max defining sets examined
  std::uint64_t seed = 1;
};

struct SearchResult {
  std::vector<int> zeros;
  int n = 0;
  int k = 0;
  DistanceEstimate distance;
  bool locality_certified = false;
  int availability_t = 0;
  BoundReport bounds;
};

struct SearchOutput {
  std::vector<SearchResult> results;  // sorted by (d desc, k desc, zeros)
  bool truncated = false;             // budget ran out before the sweep ended
};

// Enumerates every 2-closed defining set of length 2^m - 1 (all nonempty
// proper unions of cyclotomic cosets) and reports parameters, locality,
// availability and bound verdicts for each.
SearchOutput search_defining_sets(int m, const SearchOptions& opts);

nlohmann::ordered_json search_result_to_json(const SearchResult& r);

}  // namespace lrc
