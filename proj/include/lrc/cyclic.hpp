#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/bitvec.hpp"
#include "lrc/gf2m.hpp"
#include "lrc/gf2poly.hpp"

namespace lrc {

// Exponents j with g(alpha^j) = 0; must be a union of cyclotomic cosets.
struct DefiningSet {
  int n = 0;
  std::vector<int> zeros;  // sorted, unique
};

bool two_closed(const DefiningSet& s);

struct DistanceEstimate {
  int lower = 0;
  int upper = 0;
  bool exact = false;    // lower == upper
  BitVector witness;     // best codeword found; a minimum-weight word when
                         // exact, empty when no codeword was materialized
};

// Binary cyclic code of length n = 2^m - 1 given by its set of zeros.
// Coordinates are 0-indexed; codeword bit i is the coefficient of x^i and a
// cyclic shift is multiplication by x mod x^n - 1.
class CyclicCode {
 public:
  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const {
    return field_;
  }
  int n() const { return field_->n(); }
  int k() const { return k_; }
  const std::vector<int>& zeros() const { return zeros_; }
  const BinaryPolynomial& g() const { return g_; }
  const BinaryPolynomial& h() const { return h_; }

  // k rows; row i holds the coefficients of x^i * g(x)
  BinaryMatrix generator_matrix() const;
  // n-k rows; row i holds the coefficients of x^i * reciprocal(h)
  BinaryMatrix parity_check_matrix() const;

  // message of length k -> u(x) g(x)
  BitVector encode(const BitVector& message) const;
  // membership: the word's polynomial is a multiple of g
  bool contains(const BitVector& word) const;
  // membership in the dual code: orthogonal to every generator row
  bool dual_contains(const BitVector& word) const;

 private:
  std::shared_ptr<const GaloisField> field_;
  std::vector<int> zeros_;
  BinaryPolynomial g_, h_;
  int k_ = 0;

  friend CyclicCode build_code(std::shared_ptr<const GaloisField> field,
                               const DefiningSet& zeros);
};

// g = product of the minimal polynomials over the cosets in `zeros`,
// h = (x^n - 1) / g. Errors when zeros is empty, full, or not 2-closed.
CyclicCode build_code(std::shared_ptr<const GaloisField> field,
                      const DefiningSet& zeros);

// longest cyclic run of consecutive exponents in the defining set, plus one
int bch_bound(const CyclicCode& code);

struct MinDistanceOptions {
  std::uint64_t budget = std::uint64_t{1} << 28;  // max codewords enumerated
  std::uint64_t seed = 1;
  int restarts = 256;  // random information-set iterations when not exact
};

// Exact when 2^k <= budget (Gray-code walk over all messages); otherwise an
// interval [BCH bound, best found] from a weight<=4 message sweep plus a
// seeded random information-set search. Ties in the reported witness go to
// the lexicographically smallest support.
DistanceEstimate min_distance(const CyclicCode& code,
                              const MinDistanceOptions& opts = {});

// Cyclic code generated by the reciprocal of h; same length, dimension n-k.
CyclicCode dual_code(const CyclicCode& code);

}  // namespace lrc
