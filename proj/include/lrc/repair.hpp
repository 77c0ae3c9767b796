#pragma once

#include <optional>
#include <vector>

#include "lrc/cyclic.hpp"
#include "lrc/locality.hpp"

namespace lrc {

struct ErasurePattern {
  std::vector<int> erased;  // sorted coordinates in {0..n-1}
};

struct RepairTrace {
  int coordinate = -1;
  std::vector<int> reads;  // |reads| = r for local repair
  bool value = false;
};

// XOR of the surviving bits of the check's support; the check must contain
// i and no other erased coordinate.
RepairTrace local_repair(const BitVector& word, const ErasurePattern& pattern,
                         int i, const ParityCheck& check);

struct DecodeResult {
  bool success = false;
  BitVector codeword;                  // valid iff success
  std::vector<int> dependency_witness; // erased coordinates carrying a
                                       // codeword support when ambiguous
};

// Solves the parity-check system restricted to the erased columns against
// the syndrome of the surviving positions. Unique iff those columns are
// independent; guaranteed whenever |erased| <= d - 1.
DecodeResult erasure_decode(const CyclicCode& code, const BitVector& word,
                            const ErasurePattern& pattern);

// First listed check for coordinate i whose reads avoid the busy set.
std::optional<ParityCheck> choose_repair_set(
    const AvailabilityCertificate& cert, int i, const std::vector<int>& busy);

}  // namespace lrc
