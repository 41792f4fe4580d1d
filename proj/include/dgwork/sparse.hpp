#ifndef DGWORK_SPARSE_HPP
#define DGWORK_SPARSE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dgwork/scalar.hpp"

namespace dgwork {

/// Sparse vector with entries sorted by index and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;

  /// Builds from unsorted entries; duplicates are summed and zeros dropped.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(std::size_t index, Scalar value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Scalar at(std::size_t index) const;

  /// Largest stored index; requires !empty().
  std::size_t back_index() const { return entries_.back().first; }
  const Scalar& back_value() const { return entries_.back().second; }

  /// this += c * other.
  void axpy(const Scalar& c, const SparseVector& other);
  void scale(const Scalar& c);
  SparseVector operator-() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);
SparseVector operator*(const Scalar& c, const SparseVector& v);

/// Column-major sparse matrix over Scalar.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  SparseMatrix(std::size_t rows, std::vector<SparseVector> columns);

  static SparseMatrix identity(std::size_t n);
  /// Dense row-major input, for tests and small tables.
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  void set_column(std::size_t j, SparseVector v);
  void append_column(SparseVector v);
  Scalar at(std::size_t i, std::size_t j) const { return columns_[j].at(i); }
  std::size_t nnz() const;
  bool is_zero() const;

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
/// [a | b]; both must have the same row count.
SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace dgwork

#endif  // DGWORK_SPARSE_HPP
