#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kgraph {

/// Exact integer matrix stored column by column. Columns hold sorted
/// (row, value) pairs with nonzero values only.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t rows, std::size_t cols) { return SparseMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }

  std::int64_t at(std::size_t r, std::size_t c) const;
  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, std::int64_t v);
  const std::vector<Entry>& column(std::size_t c) const { return cols_[c]; }

  bool is_zero() const;
  std::size_t nonzeros() const;

  SparseMatrix adjoint() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;

  /// Every column has at most one nonzero entry, and it equals 1.
  bool is_partial_permutation() const;
  /// Diagonal with 0/1 entries.
  bool is_diagonal_projection() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

}  // namespace kgraph
