#include "lrc/gf2m.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrc {

std::vector<CyclotomicCoset> cyclotomic_cosets(int n) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("cyclotomic_cosets: n must be odd");
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    CyclotomicCoset c;
    c.n = n;
    int x = j;
    do {
      seen[x] = true;
      c.members.push_back(x);
      x = (2 * x) % n;
    } while (x != j);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  return out;
}

BinaryPolynomial GaloisField::default_primitive_poly(int m) {
  // one fixed primitive polynomial per degree, from the standard tables
  static const std::uint32_t kMasks[17] = {
      0,       0,      0x7,    0xb,    0x13,   0x25,    0x43,   0x89,  0x11d,
      0x211,   0x409,  0x805,  0x1053, 0x201b, 0x4443,  0x8003, 0x1100b};
  if (m < 2 || m > 16)
    throw std::invalid_argument(
        "unsupported extension degree m (need 2 <= m <= 16)");
  return BinaryPolynomial::from_mask(kMasks[m]);
}

GaloisField::GaloisField(int m) : GaloisField(m, default_primitive_poly(m)) {}

GaloisField::GaloisField(int m, const BinaryPolynomial& primitive_poly)
    : m_(m), primitive_poly_(primitive_poly) {
  if (m < 2 || m > 16)
    throw std::invalid_argument(
        "unsupported extension degree m (need 2 <= m <= 16)");
  if (primitive_poly_.degree() != m)
    throw std::invalid_argument("primitive polynomial degree must equal m");
  n_ = (1 << m_) - 1;
  build_tables();
}

void GaloisField::build_tables() {
  // alpha^{i+1} = alpha^i * x reduced mod the defining polynomial. The walk
  // visits every nonzero m-bit pattern exactly once iff the polynomial is
  // primitive (an element of multiplicative order 2^m - 1 forces the
  // quotient ring to be a field).
  std::uint32_t reduction = 0;
  for (int e : primitive_poly_.support())
    if (e < m_) reduction |= std::uint32_t{1} << e;

  exp_.assign(n_, 0);
  log_.assign(std::size_t{1} << m_, -1);
  std::vector<bool> seen(std::size_t{1} << m_, false);

  std::uint32_t b = 1;
  for (int i = 0; i < n_; ++i) {
    if (b == 0 || seen[b])
      throw std::invalid_argument("polynomial is not primitive over GF(2)");
    seen[b] = true;
    exp_[i] = static_cast<FieldElement>(b);
    log_[b] = i;
    b <<= 1;
    if (b >> m_) b = (b ^ reduction) & static_cast<std::uint32_t>(n_);
  }
  if (b != 1)
    throw std::invalid_argument("polynomial is not primitive over GF(2)");
}

FieldElement GaloisField::alpha_pow(int j) const {
  j %= n_;
  if (j < 0) j += n_;
  return exp_[j];
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a == 0 || b == 0) return 0;
  int s = log_[a] + log_[b];
  if (s >= n_) s -= n_;
  return exp_[s];
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a == 0) throw std::invalid_argument("inv: zero is not invertible");
  return exp_[(n_ - log_[a]) % n_];
}

FieldElement GaloisField::pow(FieldElement a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::invalid_argument("pow: zero to a negative power");
    return 0;
  }
  long long le = (static_cast<long long>(log_[a]) * (e % n_)) % n_;
  if (le < 0) le += n_;
  return exp_[le];
}

int GaloisField::log(FieldElement a) const {
  if (a == 0) throw std::invalid_argument("log: zero has no logarithm");
  return log_[a];
}

std::shared_ptr<const GaloisField> make_field(int m) {
  return std::make_shared<GaloisField>(m);
}

std::shared_ptr<const GaloisField> make_field(int m,
                                              const BinaryPolynomial& poly) {
  return std::make_shared<GaloisField>(m, poly);
}

FieldElement poly_eval(const BinaryPolynomial& p, const GaloisField& f,
                       FieldElement e) {
  FieldElement acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc = f.mul(acc, e);
    if (p.coeff(i)) acc ^= 1;
  }
  return acc;
}

BinaryPolynomial minimal_polynomial(const GaloisField& f, int exponent) {
  int n = f.n();
  exponent %= n;
  if (exponent < 0) exponent += n;

  std::vector<int> coset;
  int x = exponent;
  do {
    coset.push_back(x);
    x = (2 * x) % n;
  } while (x != exponent);

  // expand prod (x - alpha^j) with field-element coefficients
  std::vector<FieldElement> p{1};
  for (int j : coset) {
    FieldElement root = f.alpha_pow(j);
    std::vector<FieldElement> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] = static_cast<FieldElement>(q[i + 1] ^ p[i]);
      q[i] = static_cast<FieldElement>(q[i] ^ f.mul(p[i], root));
    }
    p = std::move(q);
  }

  std::vector<int> sup;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 1)
      throw std::logic_error("minimal_polynomial: non-binary coefficient");
    if (p[i]) sup.push_back(static_cast<int>(i));
  }
  return BinaryPolynomial::from_support(sup);
}

}  // namespace lrc
