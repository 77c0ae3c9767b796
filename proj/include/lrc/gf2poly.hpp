#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrc/bitvec.hpp"

namespace lrc {

struct PolyDivRem;

// Polynomial over GF(2) with bit-packed coefficients: bit i is the
// coefficient of x^i. Immutable value type; all operators return copies.
class BinaryPolynomial {
 public:
  // the zero polynomial reports this sentinel degree
  static constexpr int kZeroDegree = -1;

  BinaryPolynomial() = default;  // zero

  static BinaryPolynomial zero() { return {}; }
  static BinaryPolynomial one() { return from_mask(1); }
  static BinaryPolynomial x_pow(int e);
  static BinaryPolynomial from_mask(std::uint64_t mask);
  static BinaryPolynomial from_support(const std::vector<int>& exponents);
  static BinaryPolynomial from_hex(const std::string& hex);
  static BinaryPolynomial from_bits(const BitVector& bits);

  int degree() const { return degree_; }
  bool is_zero() const { return degree_ == kZeroDegree; }
  bool is_one() const { return degree_ == 0; }
  bool coeff(int i) const;
  int weight() const;
  std::vector<int> support() const;

  // hex encoding of the coefficient mask, LSB = constant term
  std::string to_hex() const;
  BitVector to_bits(int length) const;

  // x^deg * p(1/x), i.e. the coefficient sequence reversed
  BinaryPolynomial reciprocal() const;

  friend BinaryPolynomial operator+(const BinaryPolynomial& a,
                                    const BinaryPolynomial& b);
  friend BinaryPolynomial operator*(const BinaryPolynomial& a,
                                    const BinaryPolynomial& b);

  // b must be nonzero; a = q*b + r with deg r < deg b
  static PolyDivRem divrem(const BinaryPolynomial& a,
                           const BinaryPolynomial& b);

  friend BinaryPolynomial operator/(const BinaryPolynomial& a,
                                    const BinaryPolynomial& b);
  friend BinaryPolynomial operator%(const BinaryPolynomial& a,
                                    const BinaryPolynomial& b);

  bool operator==(const BinaryPolynomial&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  int degree_ = kZeroDegree;

  void xor_shifted(const BinaryPolynomial& p, int shift);
  void normalize();
};

struct PolyDivRem {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

inline BinaryPolynomial operator/(const BinaryPolynomial& a,
                                  const BinaryPolynomial& b) {
  return BinaryPolynomial::divrem(a, b).quotient;
}
inline BinaryPolynomial operator%(const BinaryPolynomial& a,
                                  const BinaryPolynomial& b) {
  return BinaryPolynomial::divrem(a, b).remainder;
}

// x^n - 1 (equals x^n + 1 over GF(2))
BinaryPolynomial xn_minus_one(int n);

}  // namespace lrc
