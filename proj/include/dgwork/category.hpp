#ifndef DGWORK_CATEGORY_HPP
#define DGWORK_CATEGORY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgwork/sparse.hpp"

namespace dgwork {

/// Koszul sign for swapping homogeneous symbols of degrees p and q.
inline int koszul_sign(int p, int q) { return ((p * q) % 2 == 0) ? 1 : -1; }
inline int parity_sign(int p) { return (p % 2 == 0) ? 1 : -1; }

struct BasisElement {
  std::string label;
  int degree = 0;  // cohomological

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite graded vector space presented by an ordered list of labelled,
/// homogeneous basis vectors.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<BasisElement> basis) : basis_(std::move(basis)) {}

  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& elements() const { return basis_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t add(BasisElement e);

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<BasisElement> basis_;
};

/// Small DG category with finite-dimensional hom complexes.
///
/// Objects are indexed 0..n-1. hom(x, y) has a labelled graded basis, the
/// differential is a square matrix on it (column i is d of basis vector i),
/// and composition g∘f for g in hom(y, z), f in hom(x, y) is stored on basis
/// pairs; absent pairs compose to zero. Each object has an identity that is
/// one of its endomorphism basis vectors.
class Category {
 public:
  Category() = default;
  explicit Category(std::vector<std::string> objects);

  // Construction interface.
  std::size_t add_object(const std::string& name);
  std::size_t add_morphism(std::size_t x, std::size_t y, BasisElement e);
  void set_identity(std::size_t x, std::size_t basis_index);
  void set_differential(std::size_t x, std::size_t y, std::size_t i, SparseVector value);
  void set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f,
                     SparseVector value);
  /// Fills id∘f = f and g∘id = g wherever no composite is stored yet.
  void fill_identity_composites();

  std::size_t num_objects() const { return objects_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_[x]; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::optional<std::size_t> find_object(const std::string& name) const;

  const GradedBasis& hom(std::size_t x, std::size_t y) const { return homs_[slot(x, y)]; }
  std::size_t identity(std::size_t x) const { return identity_[x]; }
  bool has_identity(std::size_t x) const { return identity_[x] != npos; }

  /// d of the i-th basis vector of hom(x, y).
  const SparseVector& differential(std::size_t x, std::size_t y, std::size_t i) const;
  SparseMatrix differential_matrix(std::size_t x, std::size_t y) const;
  /// d applied to a vector of hom(x, y).
  SparseVector apply_differential(std::size_t x, std::size_t y, const SparseVector& v) const;

  /// g∘f on basis indices; returns a vector in hom(x, z).
  const SparseVector& composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g,
                                std::size_t f) const;
  /// Bilinear extension of composite.
  SparseVector compose(std::size_t x, std::size_t y, std::size_t z, const SparseVector& g,
                       const SparseVector& f) const;
  /// Stored composites for a triple, keyed by (g, f).
  const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& composites(
      std::size_t x, std::size_t y, std::size_t z) const;

  std::size_t total_dimension() const;
  /// True when every basis vector has degree 0 (hence d = 0).
  bool concentrated_in_degree_zero() const;
  /// Degree-zero, hom(x,x) = k·id and no oriented cycles through distinct objects.
  bool is_directed() const;

  friend bool operator==(const Category&, const Category&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t slot(std::size_t x, std::size_t y) const { return x * objects_.size() + y; }
  void grow(std::size_t old_n);

  std::vector<std::string> objects_;
  std::vector<GradedBasis> homs_;
  std::vector<std::vector<SparseVector>> d_;
  std::vector<std::size_t> identity_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
           std::map<std::pair<std::size_t, std::size_t>, SparseVector>>
      composites_;
};

/// A DG functor given on objects and by degree-0 linear maps on hom spaces.
struct Functor {
  std::shared_ptr<const Category> source;
  std::shared_ptr<const Category> target;
  std::vector<std::size_t> object_map;
  /// hom_map[x * n + y]: hom(Fx, Fy) x hom(x, y) matrix.
  std::vector<SparseMatrix> hom_map;

  const SparseMatrix& on_hom(std::size_t x, std::size_t y) const {
    return hom_map[x * source->num_objects() + y];
  }
  /// F(id_x) = id_{Fx} for every object.
  bool unital() const;

  static Functor identity(std::shared_ptr<const Category> c);
  /// G∘F; requires F.target and G.source to be equal categories.
  static Functor compose(const Functor& g, const Functor& f);
};

/// DG bimodule M over (A, B): spaces M(x, y) for x in A, y in B, with A
/// acting by precomposition in the first slot and B by postcomposition in
/// the second, matching the cross homs of a gluing.
struct Bimodule {
  std::shared_ptr<const Category> a;
  std::shared_ptr<const Category> b;
  std::vector<GradedBasis> spaces;                // index x * |B| + y
  std::vector<std::vector<SparseVector>> d;       // per space, per basis vector
  /// (x', x, y) -> {(m, f) -> m∘f in M(x', y)}, f in A(x', x).
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
           std::map<std::pair<std::size_t, std::size_t>, SparseVector>>
      act_a;
  /// (x, y, y') -> {(g, m) -> g∘m in M(x, y')}, g in B(y, y').
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
           std::map<std::pair<std::size_t, std::size_t>, SparseVector>>
      act_b;

  std::size_t slot(std::size_t x, std::size_t y) const { return x * b->num_objects() + y; }
  const GradedBasis& space(std::size_t x, std::size_t y) const { return spaces[slot(x, y)]; }
  std::size_t total_dimension() const;

  /// Zero bimodule over (a, b).
  static Bimodule zero(std::shared_ptr<const Category> a, std::shared_ptr<const Category> b);
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  enum class Kind { Malformed, Axiom };
  Kind kind;
  /// For axiom failures: "d_squared", "leibniz", "associativity", "unit".
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has_malformed() const;
  bool has_axiom_failure(const std::string& rule) const;
  std::string summary() const;
};

/// Exhaustive check of the DG category axioms on basis tuples.
ValidationReport validate(const Category& c);
/// Checks a functor commutes with d, composition and identities.
ValidationReport validate(const Functor& f);
/// Checks bimodule axioms by validating the associated gluing.
ValidationReport validate(const Bimodule& m);

}  // namespace dgwork

#endif  // DGWORK_CATEGORY_HPP
