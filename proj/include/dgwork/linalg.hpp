#ifndef DGWORK_LINALG_HPP
#define DGWORK_LINALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dgwork/sparse.hpp"

namespace dgwork {

/// Raised when a caller-supplied containment or shape precondition fails.
class InconsistentInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incremental column echelon form over Q.
///
/// Every stored vector has a distinct pivot, its largest row index, with
/// pivot coefficient 1. Vectors are reduced by repeatedly cancelling the
/// trailing entry, so the pivot order depends only on insertion order and
/// row numbering. When tracking is enabled each stored vector carries the
/// combination of inserted inputs that produced it.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(std::size_t rows, bool track = false);

  struct Reduction {
    SparseVector residual;
    /// Coefficients on inserted inputs; only meaningful when tracking.
    SparseVector combination;
  };

  /// Reduces v; the residual is zero iff v lies in the current span.
  Reduction reduce(SparseVector v, SparseVector combination = {}) const;

  /// Inserts v labelled with `tag` (its index among inputs, for tracking).
  /// Returns the reduction; an empty residual means v was dependent and
  /// `combination` is then a relation among inputs.
  Reduction insert(SparseVector v, std::size_t tag);

  std::size_t rank() const { return basis_.size(); }
  std::size_t rows() const { return rows_; }
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

 private:
  struct Stored {
    SparseVector vector;
    SparseVector combination;
  };
  std::size_t rows_;
  bool track_;
  std::vector<std::int64_t> pivot_of_row_;
  std::vector<Stored> basis_;
};

std::size_t rank(const SparseMatrix& m);

/// Basis of ker(m); size is cols - rank(m).
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Some x with m x = target, or nullopt when target is not in the image.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& target);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

/// Representatives of a basis of span(ambient) / span(sub), chosen among the
/// ambient vectors in order. Throws InconsistentInput if sub is not
/// contained in span(ambient).
std::vector<SparseVector> quotient_basis(const std::vector<SparseVector>& sub,
                                         const std::vector<SparseVector>& ambient,
                                         std::size_t dimension);

/// Indices of a maximal independent subset of the columns, greedy in order.
std::vector<std::size_t> independent_columns(const SparseMatrix& m);

/// Determinant of a square matrix (Gaussian elimination over Q).
Scalar determinant(const SparseMatrix& m);

/// Rank over F_p. Throws InconsistentInput if p divides a denominator.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

bool is_probable_prime(std::uint64_t n);

}  // namespace dgwork

#endif  // DGWORK_LINALG_HPP
