#pragma once

#include <cstddef>
#include <vector>

#include "syz/rational.hpp"

namespace syz {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Exact sparse matrix over the rationals, stored row-major with each row
/// sorted by column. Zero entries are never stored.
class RationalMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };
  using Row = std::vector<Entry>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate (row, col) pairs are summed; resulting zeros are dropped.
  /// Throws RangeError on an out-of-range index.
  static RationalMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> triplets);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  const Row& row(std::size_t r) const { return data_.at(r); }

  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Rational>> to_dense() const;

  RationalMatrix transpose() const;
  bool is_zero() const noexcept { return nnz() == 0; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Multiplies by a column vector of length cols().
std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v);

// Exact elimination. Rows are fed to an incremental echelon builder in order of
// increasing fill (ties by index), so every result is deterministic.

std::size_t rank(const RationalMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const RationalMatrix& m);

/// A basis of the right kernel, one vector per free column in increasing
/// column order; each vector has a 1 in its free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

}  // namespace syz
