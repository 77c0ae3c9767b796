#pragma once

#include <cstdint>
#include <vector>

namespace lrc {

// Fixed-length vector over GF(2), 64 coefficients per word, bit i of word
// i/64 holds coordinate i.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size);
  static BitVector from_support(int size, const std::vector<int>& support);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool get(int i) const;
  void set(int i, bool v);
  void flip(int i);
  bool is_zero() const;
  int weight() const;
  std::vector<int> support() const;

  // coordinate i moves to (i + s) mod size
  BitVector cyclic_shift(int s) const;

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector&) const = default;

  // parity of the inner product <a, b>
  static bool dot(const BitVector& a, const BitVector& b);

  // true when support(a) precedes support(b) lexicographically (as sorted
  // index sequences); used for deterministic tie-breaking
  static bool support_less(const BitVector& a, const BitVector& b);

  std::uint64_t fnv_hash() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major GF(2) matrix; rows are BitVectors of equal length.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BitVector& row(int i) { return data_[i]; }
  const BitVector& row(int i) const { return data_[i]; }
  BitVector column(int j) const;

  int rank() const;

  // M * v^T for v of length cols; result has length rows
  BitVector multiply(const BitVector& v) const;

  // a * b^T == 0, i.e. every row of a orthogonal to every row of b
  static bool product_is_zero(const BinaryMatrix& a, const BinaryMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BitVector> data_;
};

struct LinearSolveResult {
  bool unique = false;
  bool consistent = false;
  BitVector solution;           // valid iff unique
  std::vector<int> dependency;  // column indices of a kernel combination when
                                // the columns are dependent
};

// Solves A x = b over GF(2) with deterministic lowest-index pivoting.
LinearSolveResult solve_gf2(const BinaryMatrix& a, const BitVector& b);

// Incremental GF(2) row-echelon basis; insert() reports rank growth.
class Gf2Basis {
 public:
  bool insert(BitVector v);  // true iff v was independent of the basis
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<BitVector> rows_;  // kept in echelon form, pivots descending
  std::vector<int> pivots_;
};

}  // namespace lrc
