#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/gf2poly.hpp"

namespace lrc {

// m-bit pattern in the polynomial basis; 0 is the only non-invertible value
using FieldElement = std::uint16_t;

struct CyclotomicCoset {
  int n = 0;
  int representative = 0;    // smallest member
  std::vector<int> members;  // sorted, closed under j -> 2j mod n
};

// Partition of {0..n-1} into orbits of j -> 2j mod n, sorted by
// representative. n must be odd.
std::vector<CyclotomicCoset> cyclotomic_cosets(int n);

// GF(2^m) with log/antilog tables over a primitive polynomial. Immutable
// after construction; all operations are pure.
class GaloisField {
 public:
  explicit GaloisField(int m);
  GaloisField(int m, const BinaryPolynomial& primitive_poly);

  int m() const { return m_; }
  int n() const { return n_; }  // 2^m - 1
  const BinaryPolynomial& primitive_poly() const { return primitive_poly_; }

  FieldElement alpha_pow(int j) const;  // exponent reduced mod n
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // a != 0
  FieldElement pow(FieldElement a, long long e) const;
  int log(FieldElement a) const;  // a != 0
  static FieldElement add(FieldElement a, FieldElement b) {
    return static_cast<FieldElement>(a ^ b);
  }

  static BinaryPolynomial default_primitive_poly(int m);

 private:
  int m_ = 0;
  int n_ = 0;
  BinaryPolynomial primitive_poly_;
  std::vector<FieldElement> exp_;  // alpha^0 .. alpha^{n-1}
  std::vector<int> log_;           // log_[exp_[i]] = i

  void build_tables();
};

std::shared_ptr<const GaloisField> make_field(int m);
std::shared_ptr<const GaloisField> make_field(int m,
                                              const BinaryPolynomial& poly);

// Horner evaluation of a GF(2)[x] polynomial at a field element.
FieldElement poly_eval(const BinaryPolynomial& p, const GaloisField& f,
                       FieldElement e);

// Product of (x - alpha^j) over the cyclotomic coset of `exponent`; the
// result has GF(2) coefficients and degree equal to the coset size.
BinaryPolynomial minimal_polynomial(const GaloisField& f, int exponent);

}  // namespace lrc
