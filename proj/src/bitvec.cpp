#include "lrc/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace lrc {

namespace {
constexpr int kWordBits = 64;
inline int word_count(int size) { return (size + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(int size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_support(int size, const std::vector<int>& support) {
  BitVector v(size);
  for (int i : support) v.set(i, true);
  return v;
}

bool BitVector::get(int i) const {
  assert(i >= 0 && i < size_);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(int i, bool v) {
  assert(i >= 0 && i < size_);
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (v)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(int i) {
  assert(i >= 0 && i < size_);
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVector::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int BitVector::weight() const {
  int w = 0;
  for (auto x : words_) w += std::popcount(x);
  return w;
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (int wi = 0; wi < static_cast<int>(words_.size()); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(wi * kWordBits + b);
      w &= w - 1;
    }
  }
  return out;
}

BitVector BitVector::cyclic_shift(int s) const {
  BitVector out(size_);
  if (size_ == 0) return out;
  s %= size_;
  if (s < 0) s += size_;
  for (int wi = 0; wi < static_cast<int>(words_.size()); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      int i = wi * kWordBits + b;
      out.set((i + s) % size_, true);
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& a, const BitVector& b) {
  assert(a.size_ == b.size_);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    acc ^= a.words_[i] & b.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVector::support_less(const BitVector& a, const BitVector& b) {
  std::vector<int> sa = a.support(), sb = b.support();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                      sb.end());
}

std::uint64_t BitVector::fnv_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    for (int i = 0; i < 8; ++i) {
      h ^= (w >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitVector BinaryMatrix::column(int j) const {
  BitVector c(rows_);
  for (int i = 0; i < rows_; ++i)
    if (data_[i].get(j)) c.set(i, true);
  return c;
}

int BinaryMatrix::rank() const {
  Gf2Basis basis;
  int r = 0;
  for (const auto& row : data_)
    if (basis.insert(row)) ++r;
  return r;
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
  BitVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    if (BitVector::dot(data_[i], v)) out.set(i, true);
  return out;
}

bool BinaryMatrix::product_is_zero(const BinaryMatrix& a,
                                   const BinaryMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j)
      if (BitVector::dot(a.row(i), b.row(j))) return false;
  return true;
}

LinearSolveResult solve_gf2(const BinaryMatrix& a, const BitVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_gf2: dimension mismatch");
  int rows = a.rows(), cols = a.cols();

  // augmented rows: [A | b]
  std::vector<BitVector> aug(rows, BitVector(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j)
      if (a.row(i).get(j)) aug[i].set(j, true);
    if (b.get(i)) aug[i].set(cols, true);
  }

  std::vector<int> pivot_row(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i].get(c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[r]);
    for (int i = 0; i < rows; ++i)
      if (i != r && aug[i].get(c)) aug[i] ^= aug[r];
    pivot_row[c] = r;
    ++r;
  }

  LinearSolveResult res;
  res.consistent = true;
  for (int i = r; i < rows; ++i)
    if (aug[i].get(cols)) res.consistent = false;

  // a pivot-free column witnesses a kernel vector among the columns
  for (int c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    res.unique = false;
    res.dependency.push_back(c);
    for (int c2 = 0; c2 < cols; ++c2)
      if (pivot_row[c2] >= 0 && aug[pivot_row[c2]].get(c))
        res.dependency.push_back(c2);
    std::sort(res.dependency.begin(), res.dependency.end());
    return res;
  }
  if (!res.consistent) return res;

  res.unique = true;
  res.solution = BitVector(cols);
  for (int c = 0; c < cols; ++c)
    if (aug[pivot_row[c]].get(cols)) res.solution.set(c, true);
  return res;
}

bool Gf2Basis::insert(BitVector v) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  auto sup = v.support();
  if (sup.empty()) return false;
  pivots_.push_back(sup.back());
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace lrc
