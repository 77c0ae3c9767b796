#pragma once

#include <optional>
#include <string>

namespace lrc {

// d <= n - k - ceil(k/r) + 2
int lrc_singleton_bound(int n, int k, int r);

// dimension cap for 2-local distance-6 codes with disjoint repair groups:
// (2/3)(2^m - 1) - m, for even m > 2
long long thm1_dimension_bound(int m);

enum class KParity { even, any };

// distance-10 analogue: (2/3)(2^m - 1) - 2m for even k, one more otherwise
long long thm2_dimension_bound(int m, KParity parity);

// max log2 of the size of a GF(4) code of length n' and distance d' in
// {3, 5}, by the sphere-packing bound with radius (d'-1)/2; exact integer
// arithmetic via bit-length comparison, no floating point
long long f4_hamming_size_bound(long long n_prime, int d_prime);

enum class BoundVerdict {
  met_with_equality,
  slack,
  violated,
  consistent_not_confirmed,  // bound holds but the distance is an interval
  not_applicable,
};

std::string to_string(BoundVerdict v);

struct BoundReport {
  int singleton_d_max = 0;
  std::optional<long long> thm1_k_max;
  std::optional<long long> thm2_k_max;
  std::optional<long long> f4_hamming_k_max;

  BoundVerdict singleton = BoundVerdict::not_applicable;
  BoundVerdict thm1 = BoundVerdict::not_applicable;
  BoundVerdict thm2 = BoundVerdict::not_applicable;
  BoundVerdict f4_hamming = BoundVerdict::not_applicable;

  bool any_violation() const {
    return singleton == BoundVerdict::violated ||
           thm1 == BoundVerdict::violated ||
           thm2 == BoundVerdict::violated ||
           f4_hamming == BoundVerdict::violated;
  }
};

}  // namespace lrc
