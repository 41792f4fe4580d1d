#ifndef DGWORK_HOCHSCHILD_HPP
#define DGWORK_HOCHSCHILD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgwork/constructions.hpp"
#include "dgwork/linalg.hpp"

namespace dgwork {

struct ComputationParams {
  std::size_t max_bar_length = 6;  // L
  std::size_t max_u_power = 4;     // N
  DegreeWindow window{-4, 6};
};

/// Cyclic bar word x_0 ⊗ x_1 ⊗ ⋯ ⊗ x_n with x_j ∈ hom(O_{j+1}, O_j),
/// O_{n+1} = O_0. x_0 is the head; tail letters are never identities.
/// Homological degree: -|x_0| + Σ_{j≥1} (1 - |x_j|).
struct HochschildWord {
  std::vector<std::size_t> objects;
  std::vector<std::size_t> letters;

  std::size_t length() const { return letters.size() - 1; }
  friend bool operator==(const HochschildWord&, const HochschildWord&) = default;
  friend auto operator<=>(const HochschildWord&, const HochschildWord&) = default;
};

int homological_degree(const Category& c, const HochschildWord& w);

/// Reduced Hochschild chains of length ≤ L in a range of homological
/// degrees, with b, B and the truncation relations.
///
/// Truncation: the complex actually represented is C / J with
/// J = C_{>L} + b(C_{>L}), a sub-mixed complex. In C / J the words of length
/// ≤ L span, B vanishes on length-L words, and the extra relations are the
/// length-≤L parts of b(C_{L+1}).
class MixedComplex {
 public:
  MixedComplex(CategoryPtr c, std::size_t max_length, int min_degree, int max_degree);

  const Category& category() const { return *category_; }
  const CategoryPtr& category_ptr() const { return category_; }
  std::size_t bar_length_bound() const { return max_length_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  bool covers(int degree) const { return min_degree_ <= degree && degree <= max_degree_; }

  const std::vector<HochschildWord>& words(int degree) const;
  std::size_t dimension(int degree) const { return words(degree).size(); }
  std::optional<std::size_t> find(int degree, const HochschildWord& w) const;
  std::size_t total_words() const;

  /// b: C_m → C_{m-1}. Rows are empty when m - 1 is outside the range.
  const SparseMatrix& b(int degree) const;
  /// B: C_m → C_{m+1}; zero on length-L words.
  const SparseMatrix& B(int degree) const;
  /// Spanning set of the truncation relations inside C_m.
  const std::vector<SparseVector>& relations(int degree) const;

  /// Raw differentials on a single word, as (word, coefficient) terms.
  /// b keeps every term; B keeps every term (no truncation).
  std::vector<std::pair<HochschildWord, Scalar>> raw_b(const HochschildWord& w) const;
  std::vector<std::pair<HochschildWord, Scalar>> raw_B(const HochschildWord& w) const;

 private:
  SparseVector to_vector(int degree, const std::vector<std::pair<HochschildWord, Scalar>>& terms,
                         std::size_t max_length) const;

  CategoryPtr category_;
  std::size_t max_length_;
  int min_degree_, max_degree_;
  std::map<int, std::vector<HochschildWord>> words_;
  std::map<int, std::map<HochschildWord, std::size_t>> index_;
  std::map<int, SparseMatrix> b_, B_;
  std::map<int, std::vector<SparseVector>> relations_;
};

/// Words of length ≤ max_length of a category, in a degree range.
std::map<int, std::vector<HochschildWord>> enumerate_words(const Category& c, std::size_t min_length,
                                                           std::size_t max_length, int min_degree,
                                                           int max_degree);

// ---------------------------------------------------------------------------
// Total complexes built from a mixed complex.

enum class TotalKind { Hochschild, NegativeCyclic, Cyclic };

/// Degree m of the total space is ⊕_{i<N} C_{m + 2i} (negative cyclic,
/// u^i) or ⊕_{i<N} C_{m - 2i} (cyclic, u^{-i}); Hochschild is N = 1.
/// D = b + uB where u raises the negative-cyclic tag (killing tags ≥ N) and
/// lowers the cyclic tag (killing tag 0). Relations are inserted in every
/// tag.
class TotalComplex {
 public:
  TotalComplex(std::shared_ptr<const MixedComplex> mc, TotalKind kind, std::size_t n);

  const MixedComplex& mixed() const { return *mc_; }
  TotalKind kind() const { return kind_; }
  std::size_t u_bound() const { return n_; }
  /// Degree of the words sitting in tag i of total degree m.
  int block_degree(int m, std::size_t i) const;
  std::size_t block_offset(int m, std::size_t i) const;
  std::size_t dimension(int m) const;
  /// True when every block of degree m lies in the computed word range.
  bool covers(int m) const;

  SparseMatrix differential(int m) const;
  std::vector<SparseVector> relations(int m) const;

  /// Places a word vector into tag i of total degree m.
  SparseVector embed(int m, std::size_t i, const SparseVector& v) const;
  /// Extracts the tag-i component of a total vector.
  SparseVector component(int m, std::size_t i, const SparseVector& v) const;

 private:
  std::shared_ptr<const MixedComplex> mc_;
  TotalKind kind_;
  std::size_t n_;
};

/// Homology of a quotient complex at one degree:
/// Z = {x : Dx ∈ R_{m-1}}, Bd = R_m + D(C_{m+1}), H = Z / Bd.
class QuotientHomology {
 public:
  QuotientHomology(const TotalComplex& t, int m, bool want_representatives);

  std::size_t dimension() const { return dimension_; }
  const std::vector<SparseVector>& representatives() const { return reps_; }
  bool is_cycle(const SparseVector& v) const;
  /// Coordinates of the class of a cycle in the representative basis.
  SparseVector coordinates(const SparseVector& cycle) const;
  bool is_boundary(const SparseVector& v) const;

 private:
  std::size_t space_dim_ = 0;
  std::size_t dimension_ = 0;
  std::vector<SparseVector> reps_;
  SparseMatrix d_;                // D_m
  std::unique_ptr<ColumnEchelon> prev_relations_;
  std::unique_ptr<ColumnEchelon> boundaries_;   // Bd_m only
  std::unique_ptr<ColumnEchelon> with_reps_;    // Bd_m then reps (tracked)
  std::size_t boundary_count_ = 0;
};

struct DegreeHomology {
  std::size_t dimension = 0;
  std::vector<SparseVector> representatives;
  bool stable = false;
};

struct HomologyPresentation {
  std::string kind;  // "HH", "HC-", "HC"
  ComputationParams params;
  std::map<int, DegreeHomology> degrees;

  std::size_t dim(int n) const;
  bool stable(int n) const;
};

// ---------------------------------------------------------------------------

/// Caches mixed complexes of one category at several bar lengths.
class Workbench {
 public:
  Workbench(CategoryPtr c, ComputationParams p);

  const Category& category() const { return *category_; }
  const CategoryPtr& category_ptr() const { return category_; }
  const ComputationParams& params() const { return params_; }
  /// Mixed complex at bar length L (built on first use).
  std::shared_ptr<const MixedComplex> mixed(std::size_t L);
  TotalComplex total(std::size_t L, TotalKind kind, std::size_t n);

  /// Homology dimensions per window degree of a total complex.
  std::map<int, std::size_t> dimensions(std::size_t L, TotalKind kind, std::size_t n);
  /// Homology with representatives at one degree (built on first use).
  const QuotientHomology& homology(std::size_t L, TotalKind kind, std::size_t n, int m);

 private:
  CategoryPtr category_;
  ComputationParams params_;
  std::map<std::size_t, std::shared_ptr<const MixedComplex>> cache_;
  std::map<std::tuple<std::size_t, int, std::size_t>, std::map<int, std::size_t>> dims_cache_;
  std::map<std::tuple<std::size_t, int, std::size_t, int>, std::unique_ptr<QuotientHomology>>
      homology_cache_;
};

/// Largest degree in which HH of a category in degree zero is exact at bar
/// length L, or nullopt when the category is graded.
std::optional<int> analytic_hh_frontier(const Category& c, std::size_t L);

HomologyPresentation hh(Workbench& w, bool want_representatives = true);
HomologyPresentation hh(const CategoryPtr& c, const ComputationParams& p);

// ---------------------------------------------------------------------------

struct IdentityCheck {
  std::size_t words_checked = 0;
  std::size_t b_squared_failures = 0;
  std::size_t B_squared_failures = 0;
  std::size_t anticommutator_failures = 0;
  std::size_t reducedness_failures = 0;
  bool ok() const {
    return b_squared_failures == 0 && B_squared_failures == 0 && anticommutator_failures == 0 &&
           reducedness_failures == 0;
  }
};

/// b² = 0 on all words, bB + Bb = 0 on length ≤ L-1, B² = 0 on length ≤ L-2,
/// and no B-image carries an identity in its tail.
IdentityCheck check_mixed_identities(const MixedComplex& mc);

struct DegreeComparison {
  int degree;
  std::size_t expected;
  std::size_t actual;
  bool stable;
  bool match() const { return expected == actual; }
};

struct KunnethReport {
  std::vector<DegreeComparison> degrees;  // mutually stable degrees only
  bool ok() const;
};

KunnethReport kunneth_check(const CategoryPtr& a, const CategoryPtr& b, const ComputationParams& p);

struct GluingAdditivityReport {
  std::size_t glued_words = 0;
  std::size_t a_words = 0;
  std::size_t b_words = 0;
  std::size_t mixed_words = 0;         // words touching both sides: must be 0
  bool partition_exact = false;        // bijection with the factors' words
  bool b_blocks_equal = false;
  bool B_blocks_equal = false;
  bool ok() const { return mixed_words == 0 && partition_exact && b_blocks_equal && B_blocks_equal; }
};

GluingAdditivityReport gluing_additivity_check(const CategoryPtr& a, const CategoryPtr& b,
                                               const Bimodule& m, const ComputationParams& p);

/// F applied letterwise. Terms whose tail picks up an identity are dropped.
std::vector<std::pair<HochschildWord, Scalar>> apply_functor_on_word(const Functor& f,
                                                                     const HochschildWord& w);
SparseVector apply_functor_on_chains(const Functor& f, const MixedComplex& source, int degree,
                                     const SparseVector& chain, const MixedComplex& target);

struct InducedMap {
  std::map<int, SparseMatrix> matrices;  // per stable degree, target × source
};

/// F^* on HH bases. A non-unital functor only induces a map on HH_0 of
/// categories concentrated in degree 0; other degrees are omitted.
InducedMap hh_induced_map(const Functor& f, Workbench& source, Workbench& target);

}  // namespace dgwork

#endif  // DGWORK_HOCHSCHILD_HPP
