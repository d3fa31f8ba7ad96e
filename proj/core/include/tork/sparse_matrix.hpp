#pragma once

#include "tork/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tork {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

// Immutable exact-rational sparse matrix in compressed-row form. No explicit
// zeros are stored and every (row, col) appears at most once.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Zero values are dropped. Throws std::invalid_argument if an index is out
  // of range or a position repeats.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

  // Same as the constructor, except repeated positions are summed.
  static SparseMatrix accumulate(std::size_t rows, std::size_t cols,
                                 std::vector<MatrixEntry> entries);

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  // Column indices and values of a row, in increasing column order.
  std::span<const std::uint32_t> row_cols(std::size_t r) const;
  std::span<const Rational> row_values(std::size_t r) const;

  Rational at(std::size_t r, std::size_t c) const;

  // Row-major list of the stored entries.
  std::vector<MatrixEntry> entries() const;

  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  void build(std::vector<MatrixEntry> entries, bool sum_duplicates);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_start_{0};
  std::vector<std::uint32_t> col_index_;
  std::vector<Rational> values_;
};

// Exact rank over Q. The matrix is split into the connected components of its
// row/column incidence graph and each block is eliminated independently.
std::size_t rank(const SparseMatrix& a);

// cols(a) - rank(a)
std::size_t nullity(const SparseMatrix& a);

// Exact product a * b. Throws std::invalid_argument unless a.cols() == b.rows().
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace tork
