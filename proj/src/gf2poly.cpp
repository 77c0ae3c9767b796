#include "lrc/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace lrc {

namespace {
constexpr int kWordBits = 64;
}

BinaryPolynomial BinaryPolynomial::x_pow(int e) {
  if (e < 0) throw std::invalid_argument("x_pow: negative exponent");
  BinaryPolynomial p;
  p.words_.assign(e / kWordBits + 1, 0);
  p.words_[e / kWordBits] = std::uint64_t{1} << (e % kWordBits);
  p.degree_ = e;
  return p;
}

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
  BinaryPolynomial p;
  if (mask) {
    p.words_.push_back(mask);
    p.degree_ = 63 - std::countl_zero(mask);
  }
  return p;
}

BinaryPolynomial BinaryPolynomial::from_support(
    const std::vector<int>& exponents) {
  BinaryPolynomial p;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("from_support: negative exponent");
    if (e / kWordBits >= static_cast<int>(p.words_.size()))
      p.words_.resize(e / kWordBits + 1, 0);
    p.words_[e / kWordBits] ^= std::uint64_t{1} << (e % kWordBits);
  }
  p.normalize();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(const std::string& hex) {
  std::string s = hex;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty()) throw std::invalid_argument("from_hex: empty string");
  BinaryPolynomial p;
  int nibbles = static_cast<int>(s.size());
  p.words_.assign((nibbles * 4 + kWordBits - 1) / kWordBits, 0);
  for (int i = 0; i < nibbles; ++i) {
    char c = s[nibbles - 1 - i];  // digit i holds bits 4i..4i+3
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else
      throw std::invalid_argument("from_hex: bad digit");
    p.words_[i / 16] |= std::uint64_t(v) << (4 * (i % 16));
  }
  p.normalize();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_bits(const BitVector& bits) {
  BinaryPolynomial p;
  p.words_ = bits.words();
  p.normalize();
  return p;
}

bool BinaryPolynomial::coeff(int i) const {
  if (i < 0 || i / kWordBits >= static_cast<int>(words_.size())) return false;
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

int BinaryPolynomial::weight() const {
  int w = 0;
  for (auto x : words_) w += std::popcount(x);
  return w;
}

std::vector<int> BinaryPolynomial::support() const {
  std::vector<int> out;
  for (int wi = 0; wi < static_cast<int>(words_.size()); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(wi * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BinaryPolynomial::to_hex() const {
  if (is_zero()) return "0";
  int nibbles = degree_ / 4 + 1;
  std::string s(nibbles, '0');
  static const char* digits = "0123456789abcdef";
  for (int i = 0; i < nibbles; ++i) {
    int v = static_cast<int>((words_[i / 16] >> (4 * (i % 16))) & 0xf);
    s[nibbles - 1 - i] = digits[v];
  }
  return s;
}

BitVector BinaryPolynomial::to_bits(int length) const {
  if (degree_ >= length)
    throw std::invalid_argument("to_bits: degree exceeds length");
  BitVector v(length);
  for (int e : support()) v.set(e, true);
  return v;
}

BinaryPolynomial BinaryPolynomial::reciprocal() const {
  if (is_zero()) return zero();
  std::vector<int> sup = support();
  std::vector<int> rev;
  rev.reserve(sup.size());
  for (int e : sup) rev.push_back(degree_ - e);
  return from_support(rev);
}

void BinaryPolynomial::xor_shifted(const BinaryPolynomial& p, int shift) {
  int wshift = shift / kWordBits, bshift = shift % kWordBits;
  int need = static_cast<int>(p.words_.size()) + wshift + 1;
  if (static_cast<int>(words_.size()) < need) words_.resize(need, 0);
  for (int i = 0; i < static_cast<int>(p.words_.size()); ++i) {
    std::uint64_t w = p.words_[i];
    if (!w) continue;
    words_[i + wshift] ^= w << bshift;
    if (bshift) words_[i + wshift + 1] ^= w >> (kWordBits - bshift);
  }
}

void BinaryPolynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  if (words_.empty()) {
    degree_ = kZeroDegree;
  } else {
    degree_ = static_cast<int>(words_.size() - 1) * kWordBits + 63 -
              std::countl_zero(words_.back());
  }
}

BinaryPolynomial operator+(const BinaryPolynomial& a,
                           const BinaryPolynomial& b) {
  BinaryPolynomial r = a;
  r.xor_shifted(b, 0);
  r.normalize();
  return r;
}

BinaryPolynomial operator*(const BinaryPolynomial& a,
                           const BinaryPolynomial& b) {
  BinaryPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  for (int e : a.support()) r.xor_shifted(b, e);
  r.normalize();
  return r;
}

PolyDivRem BinaryPolynomial::divrem(const BinaryPolynomial& a,
                                    const BinaryPolynomial& b) {
  if (b.is_zero())
    throw std::invalid_argument("divrem: division by the zero polynomial");
  PolyDivRem out;
  BinaryPolynomial r = a;
  std::vector<int> qsup;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int s = r.degree() - b.degree();
    r.xor_shifted(b, s);
    r.normalize();
    qsup.push_back(s);
  }
  out.quotient = from_support(qsup);
  out.remainder = r;
  return out;
}

BinaryPolynomial xn_minus_one(int n) {
  if (n <= 0) throw std::invalid_argument("xn_minus_one: n must be positive");
  return BinaryPolynomial::from_support({0, n});
}

}  // namespace lrc
