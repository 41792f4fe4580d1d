#include "dgwork/linalg.hpp"

#include <algorithm>
#include <map>

namespace dgwork {

ColumnEchelon::ColumnEchelon(std::size_t rows, bool track)
    : rows_(rows), track_(track), pivot_of_row_(rows, -1) {}

ColumnEchelon::Reduction ColumnEchelon::reduce(SparseVector v,
                                               SparseVector combination) const {
  while (!v.empty()) {
    const std::size_t p = v.back_index();
    if (p >= rows_) throw InconsistentInput("ColumnEchelon: vector exceeds row count");
    const std::int64_t slot = pivot_of_row_[p];
    if (slot < 0) break;
    const Stored& s = basis_[static_cast<std::size_t>(slot)];
    const Scalar c = -v.back_value();
    v.axpy(c, s.vector);
    if (track_) combination.axpy(c, s.combination);
  }
  return {std::move(v), std::move(combination)};
}

ColumnEchelon::Reduction ColumnEchelon::insert(SparseVector v, std::size_t tag) {
  SparseVector comb = track_ ? SparseVector::unit(tag) : SparseVector{};
  Reduction r = reduce(std::move(v), std::move(comb));
  if (r.residual.empty()) return r;
  const Scalar inv = 1 / r.residual.back_value();
  Stored s{r.residual, r.combination};
  s.vector.scale(inv);
  if (track_) s.combination.scale(inv);
  pivot_of_row_[s.vector.back_index()] = static_cast<std::int64_t>(basis_.size());
  basis_.push_back(std::move(s));
  return r;
}

std::size_t rank(const SparseMatrix& m) {
  ColumnEchelon e(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), j);
  return e.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  ColumnEchelon e(m.rows(), true);
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto r = e.insert(m.column(j), j);
    if (r.residual.empty()) out.push_back(std::move(r.combination));
  }
  return out;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& target) {
  ColumnEchelon e(m.rows(), true);
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), j);
  auto r = e.reduce(target, SparseVector{});
  if (!r.residual.empty()) return std::nullopt;
  // target - sum(stored) = 0, so x = -combination.
  return -r.combination;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw InconsistentInput("inverse: matrix not square");
  const std::size_t n = m.rows();
  ColumnEchelon e(n, true);
  for (std::size_t j = 0; j < n; ++j) e.insert(m.column(j), j);
  if (e.rank() != n) return std::nullopt;
  SparseMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) out.set_column(j, -e.reduce(SparseVector::unit(j)).combination);
  return out;
}

std::vector<SparseVector> quotient_basis(const std::vector<SparseVector>& sub,
                                         const std::vector<SparseVector>& ambient,
                                         std::size_t dimension) {
  ColumnEchelon amb(dimension);
  for (std::size_t j = 0; j < ambient.size(); ++j) amb.insert(ambient[j], j);
  ColumnEchelon e(dimension);
  std::size_t tag = 0;
  for (const auto& s : sub) {
    if (!amb.contains(s)) {
      throw InconsistentInput("quotient_basis: subspace not contained in ambient span");
    }
    e.insert(s, tag++);
  }
  std::vector<SparseVector> reps;
  for (const auto& a : ambient) {
    if (!e.insert(a, tag++).residual.empty()) reps.push_back(a);
  }
  return reps;
}

std::vector<std::size_t> independent_columns(const SparseMatrix& m) {
  ColumnEchelon e(m.rows());
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!e.insert(m.column(j), j).residual.empty()) idx.push_back(j);
  }
  return idx;
}

Scalar determinant(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw InconsistentInput("determinant: matrix not square");
  auto a = m.to_dense();
  const std::size_t n = a.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  if (!is_probable_prime(p)) throw InconsistentInput("rank_mod_p: modulus is not prime");
  using Col = std::map<std::size_t, std::uint64_t>;
  std::vector<std::int64_t> pivot_of_row(m.rows(), -1);
  std::vector<Col> basis;
  for (const auto& column : m.columns()) {
    Col v;
    for (const auto& [i, x] : column.entries()) {
      auto r = reduce_mod(x, p);
      if (!r) throw InconsistentInput("rank_mod_p: prime divides a denominator");
      if (*r != 0) v[i] = *r;
    }
    while (!v.empty()) {
      auto last = std::prev(v.end());
      const std::int64_t slot = pivot_of_row[last->first];
      if (slot < 0) break;
      const std::uint64_t c = p - last->second;
      for (const auto& [i, y] : basis[static_cast<std::size_t>(slot)]) {
        std::uint64_t nv = (v.count(i) ? v[i] : 0) + mul_mod(c, y, p);
        nv %= p;
        if (nv == 0) v.erase(i); else v[i] = nv;
      }
    }
    if (v.empty()) continue;
    const std::uint64_t inv = pow_mod(std::prev(v.end())->second, p - 2, p);
    for (auto& [i, y] : v) y = mul_mod(y, inv, p);
    pivot_of_row[std::prev(v.end())->first] = static_cast<std::int64_t>(basis.size());
    basis.push_back(std::move(v));
  }
  return basis.size();
}

}  // namespace dgwork
