#include "dgwork/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgwork {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
      if (v.entries_.back().second == 0) v.entries_.pop_back();
    } else if (e.second != 0) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVector SparseVector::unit(std::size_t index, Scalar value) {
  SparseVector v;
  if (value != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
  if (c == 0 || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Scalar& c) {
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVector SparseVector::operator-() const {
  SparseVector v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(1, b);
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(-1, b);
  return r;
}

SparseVector operator*(const Scalar& c, const SparseVector& v) {
  SparseVector r = v;
  r.scale(c);
  return r;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (!c.empty() && c.back_index() >= rows_) {
      throw std::out_of_range("SparseMatrix: row index out of bounds");
    }
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_dense: ragged rows");
      if (rows[i][j] != 0) e.emplace_back(i, rows[i][j]);
    }
    m.columns_[j] = SparseVector::from_entries(std::move(e));
  }
  return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
  if (!v.empty() && v.back_index() >= rows_) {
    throw std::out_of_range("SparseMatrix::set_column: row index out of bounds");
  }
  columns_.at(j) = std::move(v);
}

void SparseMatrix::append_column(SparseVector v) {
  if (!v.empty() && v.back_index() >= rows_) {
    throw std::out_of_range("SparseMatrix::append_column: row index out of bounds");
  }
  columns_.push_back(std::move(v));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [j, x] : v.entries()) {
    for (const auto& [i, a] : columns_.at(j).entries()) acc.emplace_back(i, a * x);
  }
  return SparseVector::from_entries(std::move(acc));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, a] : columns_[j].entries()) rows[i].emplace_back(j, a);
  }
  SparseMatrix t(cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    t.columns_[i] = SparseVector::from_entries(std::move(rows[i]));
  }
  return t;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), 0));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, a] : columns_[j].entries()) d[i][j] = a;
  }
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  std::vector<SparseVector> cols;
  cols.reserve(b.cols());
  for (const auto& c : b.columns()) cols.push_back(a.apply(c));
  return SparseMatrix(a.rows(), std::move(cols));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j) + b.column(j));
  return SparseMatrix(a.rows(), std::move(cols));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j) - b.column(j));
  return SparseMatrix(a.rows(), std::move(cols));
}

SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  std::vector<SparseVector> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return SparseMatrix(a.rows(), std::move(cols));
}

}  // namespace dgwork
