#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/cyclic.hpp"

namespace lrc {

// A dual codeword used as a repair rule; weight = |support| = r+1.
struct ParityCheck {
  std::vector<int> support;  // sorted
  BitVector vec;

  bool operator==(const ParityCheck&) const = default;
};

struct RepairGroup {
  std::vector<int> coordinates;  // sorted, size r+1
};

// Complete list of dual codewords of weight exactly w, sorted by support.
// Exact for w <= 5 and n <= 1023 (meet-in-the-middle over column subsets);
// otherwise enumerates the dual row space when n-k <= 28.
std::vector<ParityCheck> find_low_weight_duals(const CyclicCode& code, int w);

struct LocalityCertificate {
  bool certified = false;
  std::vector<ParityCheck> checks;    // all weight-(r+1) dual words
  std::vector<int> coordinate_check;  // per coordinate: index into checks,
                                      // -1 where uncovered
};

// True iff the supports of the weight-(r+1) dual words cover every
// coordinate; the certificate maps each coordinate to one covering check.
LocalityCertificate verify_locality(const CyclicCode& code, int r);

// Linearly independent subset whose supports still cover all n coordinates:
// greedy rank growth in support order, then a back-to-front coverage prune.
// Errors when the input does not cover {0..n-1}.
std::vector<ParityCheck> extract_independent_cover(
    int n, const std::vector<ParityCheck>& checks);

// Partition of the coordinates into n/(r+1) groups each carrying a dual
// word, when one exists. The arithmetic pattern {i, i+n/(r+1), ...} is tried
// first, then exact cover over all weight-(r+1) dual words.
std::optional<std::vector<RepairGroup>> find_disjoint_groups(
    const CyclicCode& code, int r);

struct AvailabilityCertificate {
  int t = 0;
  // per coordinate i: >= t checks containing i, pairwise meeting only in {i}
  std::vector<std::vector<ParityCheck>> per_coordinate;
  bool greedy_used = false;  // exhaustive (optimal) only for t <= 3
};

struct AvailabilityResult {
  bool certified = false;
  int failed_coordinate = -1;
  AvailabilityCertificate certificate;
};

AvailabilityResult verify_availability(const CyclicCode& code, int r, int t);

// GF(4) symbols as 2-bit values 0,1,omega,omega-bar; addition is XOR.
enum class F4 : std::uint8_t { zero = 0, one = 1, omega = 2, omega_bar = 3 };

// Group projections map as 000->0, 011->1, 101->omega, 110->omega-bar;
// throws when a projection has odd parity (the group is not a repair group).
std::vector<F4> contract_word(const BitVector& word,
                              const std::vector<RepairGroup>& groups);

struct F4Contraction {
  int length = 0;
  int log2_size = 0;
  DistanceEstimate distance;
  bool enumerated = false;  // full image walk vs derived from the binary code
};

// Contraction of a 2-local code with disjoint groups of the
// pattern {i, i+n/3, i+2n/3} to an additive code over GF(4) of length n/3
// and size 2^k. Image distance is enumerated when 2^k fits the budget and
// otherwise derived from the binary distance (each nonzero projection has
// binary weight exactly 2).
F4Contraction contract_to_f4(const CyclicCode& code,
                             const std::vector<RepairGroup>& groups,
                             const MinDistanceOptions& opts = {});

}  // namespace lrc
