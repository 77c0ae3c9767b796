#include "lrc/bounds.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace lrc {

int lrc_singleton_bound(int n, int k, int r) {
  if (k < 1 || k > n || r < 1)
    throw std::invalid_argument("lrc_singleton_bound: need 1 <= k <= n, r >= 1");
  return n - k - (k + r - 1) / r + 2;
}

namespace {

void require_even_m(int m) {
  if (m <= 2 || m % 2 != 0)
    throw std::invalid_argument("dimension bound: m must be even and > 2");
}

// smallest c with 2^c >= v
int ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : std::bit_width(v - 1);
}

}  // namespace

long long thm1_dimension_bound(int m) {
  require_even_m(m);
  long long n = (1ll << m) - 1;
  return 2 * n / 3 - m;
}

long long thm2_dimension_bound(int m, KParity parity) {
  require_even_m(m);
  long long n = (1ll << m) - 1;
  long long even_case = 2 * n / 3 - 2 * m;
  return parity == KParity::even ? even_case : even_case + 1;
}

long long f4_hamming_size_bound(long long n_prime, int d_prime) {
  if (n_prime < 1)
    throw std::invalid_argument("f4_hamming_size_bound: n' must be >= 1");
  if (d_prime != 3 && d_prime != 5)
    throw std::invalid_argument("f4_hamming_size_bound: d' must be 3 or 5");
  // sphere volume: 1 + 3n'           (radius 1)
  //                1 + 3n' + 9n'(n'-1)/2  (radius 2)
  std::uint64_t vol = 1 + 3ull * n_prime;
  if (d_prime == 5) vol += 9ull * n_prime * (n_prime - 1) / 2;
  // floor(log2(4^n' / vol)) = 2n' - ceil(log2 vol)
  return 2 * n_prime - ceil_log2(vol);
}

std::string to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::met_with_equality:
      return "met_with_equality";
    case BoundVerdict::slack:
      return "slack";
    case BoundVerdict::violated:
      return "violated";
    case BoundVerdict::consistent_not_confirmed:
      return "consistent_not_confirmed";
    case BoundVerdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

}  // namespace lrc
