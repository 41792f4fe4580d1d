#ifndef DGWORK_CYCLIC_HPP
#define DGWORK_CYCLIC_HPP

#include <string>
#include <vector>

#include "dgwork/hochschild.hpp"

namespace dgwork {

/// Homology of CC⁻ / u^N. Stable means unchanged under N → N+1 and L → L+1.
HomologyPresentation hc_minus(Workbench& w, bool want_representatives = false);
HomologyPresentation hc_minus(const CategoryPtr& c, const ComputationParams& p);

/// Homology of the cyclic complex with u^{-i}, i < N. Same stability rule.
HomologyPresentation hc(Workbench& w, bool want_representatives = false);
HomologyPresentation hc(const CategoryPtr& c, const ComputationParams& p);

enum class Verdict { Zero, Nonzero, Unstable };
std::string to_string(Verdict v);

/// δ: HH_n → H_{n+1}(CC⁻/u^N), [z] ↦ [Bz] in the u^0 tag.
struct DeltaVerdict {
  int degree = 0;
  SparseMatrix matrix;          // target basis × HH_n basis, at (L, N)
  std::size_t rank = 0;
  std::size_t rank_next = 0;    // at (L+1, N+1)
  std::size_t bar_length = 0;   // L
  std::size_t u_power = 0;      // N
  bool stable = false;
  Verdict verdict = Verdict::Unstable;
};

std::vector<DeltaVerdict> delta(Workbench& w);

/// Matrix of δ at one degree for explicit (L, N).
SparseMatrix delta_matrix(Workbench& w, std::size_t L, std::size_t N, int n);

struct DegenerationReport {
  std::vector<DeltaVerdict> verdicts;
  std::size_t stable_degrees = 0;
  std::size_t unstable_degrees = 0;
  /// All stable verdicts are zero. Says nothing outside the window.
  bool degenerate = false;
};

DegenerationReport degeneration_check(Workbench& w);

/// One degree n of
///   H_{n+2}(Q_N) -u-> H_n(Q_{N+1}) -p-> HH_n -δ-> H_{n+1}(Q_N) -u-> H_{n-1}(Q_{N+1})
/// where Q_N = CC⁻/u^N.
struct LesDegree {
  int degree = 0;
  std::size_t dim_a = 0;   // H_{n+2}(Q_N)
  std::size_t dim_b = 0;   // H_n(Q_{N+1})
  std::size_t dim_h = 0;   // HH_n
  std::size_t dim_c = 0;   // H_{n+1}(Q_N)
  std::size_t rank_u = 0;  // into H_n(Q_{N+1})
  std::size_t rank_p = 0;
  std::size_t rank_delta = 0;
  std::size_t rank_u_next = 0;  // H_{n+1}(Q_N) → H_{n-1}(Q_{N+1})
  bool exact_at_b = false;      // ker p = im u
  bool exact_at_h = false;      // ker δ = im p
  bool exact_at_c = false;      // ker u = im δ
  bool compositions_zero = false;
  bool stable = false;
  bool exact() const { return exact_at_b && exact_at_h && exact_at_c && compositions_zero; }
};

struct LongExactReport {
  std::vector<LesDegree> degrees;
  std::size_t stable_degrees() const;
  /// Exact at every stable degree.
  bool ok() const;
};

LongExactReport long_exact_check(Workbench& w);

struct E1Degree {
  int degree = 0;
  std::size_t hh_dim = 0;
  SparseMatrix d1;  // induced B: HH_n → HH_{n+1}
  std::size_t d1_rank = 0;
  Verdict delta = Verdict::Unstable;
  bool agrees = false;  // (δ = 0) == (d₁ = 0), stable degrees only
};

struct E1Page {
  std::size_t columns = 0;  // u-powers u^0 … u^{-(N-1)}
  std::map<int, std::size_t> hh_dims;
  std::vector<E1Degree> degrees;
  std::vector<int> discrepancies;
};

E1Page e1_page(Workbench& w);

struct UModuleDegree {
  int degree = 0;
  bool matches = false;  // u ∘ u = u² as maps H_{n+4} → H_n
  std::size_t rank_u2 = 0;
};

struct UModuleReport {
  std::vector<UModuleDegree> degrees;
  bool ok() const;
};

UModuleReport u_module_check(Workbench& w);

/// δ ∘ F^* = F^* ∘ δ on stable degrees, for a unital functor.
struct FunctorialityReport {
  std::vector<int> checked;
  std::vector<int> failed;
  bool ok() const { return failed.empty(); }
};

FunctorialityReport delta_functoriality(const Functor& f, Workbench& source, Workbench& target);

/// HH and HC⁻ dimensions of two categories on mutually stable degrees.
struct MoritaReport {
  std::vector<DegreeComparison> hh;
  std::vector<DegreeComparison> hc_minus;
  bool ok() const;
};

MoritaReport morita_check(Workbench& a, Workbench& b);

}  // namespace dgwork

#endif  // DGWORK_CYCLIC_HPP
