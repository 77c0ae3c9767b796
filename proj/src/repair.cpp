#include "lrc/repair.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

RepairTrace local_repair(const BitVector& word, const ErasurePattern& pattern,
                         int i, const ParityCheck& check) {
  if (!std::binary_search(check.support.begin(), check.support.end(), i))
    throw std::invalid_argument(
        "local_repair: check does not contain the target coordinate");
  for (int j : check.support)
    if (j != i &&
        std::binary_search(pattern.erased.begin(), pattern.erased.end(), j))
      throw std::invalid_argument(
          "local_repair: another support coordinate is erased");

  RepairTrace trace;
  trace.coordinate = i;
  bool v = false;
  for (int j : check.support) {
    if (j == i) continue;
    trace.reads.push_back(j);
    v ^= word.get(j);
  }
  trace.value = v;
  return trace;
}

DecodeResult erasure_decode(const CyclicCode& code, const BitVector& word,
                            const ErasurePattern& pattern) {
  const int n = code.n();
  if (word.size() != n)
    throw std::invalid_argument("erasure_decode: word length mismatch");
  std::vector<int> erased = pattern.erased;
  std::sort(erased.begin(), erased.end());
  erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
  for (int e : erased)
    if (e < 0 || e >= n)
      throw std::invalid_argument("erasure_decode: coordinate out of range");

  DecodeResult res;
  if (erased.empty()) {
    res.success = true;
    res.codeword = word;
    return res;
  }

  BitVector survived = word;
  for (int e : erased) survived.set(e, false);

  BinaryMatrix par = code.parity_check_matrix();
  BitVector syndrome = par.multiply(survived);

  BinaryMatrix sub(par.rows(), static_cast<int>(erased.size()));
  for (int i = 0; i < par.rows(); ++i)
    for (std::size_t c = 0; c < erased.size(); ++c)
      if (par.row(i).get(erased[c])) sub.row(i).set(static_cast<int>(c), true);

  LinearSolveResult sol = solve_gf2(sub, syndrome);
  if (!sol.unique) {
    for (int c : sol.dependency)
      res.dependency_witness.push_back(erased[c]);
    return res;
  }
  res.success = true;
  res.codeword = survived;
  for (std::size_t c = 0; c < erased.size(); ++c)
    if (sol.solution.get(static_cast<int>(c)))
      res.codeword.set(erased[c], true);
  return res;
}

std::optional<ParityCheck> choose_repair_set(
    const AvailabilityCertificate& cert, int i,
    const std::vector<int>& busy) {
  if (i < 0 || i >= static_cast<int>(cert.per_coordinate.size()))
    return std::nullopt;
  for (const ParityCheck& check : cert.per_coordinate[i]) {
    bool blocked = false;
    for (int j : check.support)
      if (j != i && std::find(busy.begin(), busy.end(), j) != busy.end()) {
        blocked = true;
        break;
      }
    if (!blocked) return check;
  }
  return std::nullopt;
}

}  // namespace lrc
