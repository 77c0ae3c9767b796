#pragma once

#include <memory>

#include "lrc/cyclic.hpp"

namespace lrc {

struct ConstructionResult {
  CyclicCode code;
  int locality_r = 0;
  int availability_t = 1;
  int claimed_distance = 0;
  bool distance_is_exact = false;  // true where an equality is claimed
  int claimed_dimension = 0;
};

// Zeros at every multiple of r+1; Singleton-optimal with d = 2.
// Requires r even and (r+1) | 2^m - 1.
ConstructionResult construction_1(int m, int r);
ConstructionResult construction_1(std::shared_ptr<const GaloisField> field,
                                  int r);

// Construction 1 zeros (r = 2) plus the cyclotomic coset of alpha;
// k = (2/3)(2^m - 1) - m, d >= 6. Requires m even, m > 2.
ConstructionResult construction_2(int m);
ConstructionResult construction_2(std::shared_ptr<const GaloisField> field);

// Additionally the coset of alpha^{-1}; k = (2/3)(2^m - 1) - 2m, d >= 10.
ConstructionResult construction_d10(int m);
ConstructionResult construction_d10(std::shared_ptr<const GaloisField> field);

// 3-available-2-local family with h = 1 + x^{n/7} + x^{3n/7} and k = 3n/7;
// the defining set is the complement of the root exponents of h (residues
// {0,3,5,6} mod 7 when alpha^{n/7} satisfies y^3+y+1, else the mirror set).
// Requires 3 | m.
ConstructionResult construction_available(int m);
ConstructionResult construction_available(
    std::shared_ptr<const GaloisField> field);

}  // namespace lrc
