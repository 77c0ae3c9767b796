#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cyclic.hpp"
#include "lrc/locality.hpp"

namespace lrc {

struct AnalyzeOptions {
  std::uint64_t budget = std::uint64_t{1} << 28;
  std::uint64_t seed = 1;
  int restarts = 256;
  std::optional<int> locality_r;      // default: scan r in 1..4
  std::optional<int> availability_t;  // default: largest certified t <= 3
};

struct AnalysisReport {
  int n = 0;
  int k = 0;
  DistanceEstimate distance;
  int bch = 0;

  bool locality_certified = false;
  int locality_r = 0;  // meaningful iff certified

  std::optional<std::vector<RepairGroup>> disjoint_groups;

  bool availability_certified = false;
  int availability_t = 0;

  std::optional<F4Contraction> f4;
  BoundReport bounds;

  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  int restarts = 0;
};

// Full certification pipeline: distance, locality, disjoint groups,
// availability, GF(4) contraction, and every applicable bound verdict.
AnalysisReport analyze_code(const CyclicCode& code,
                            const AnalyzeOptions& opts = {});

nlohmann::ordered_json report_to_json(const AnalysisReport& report);

}  // namespace lrc
