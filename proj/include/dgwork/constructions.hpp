#ifndef DGWORK_CONSTRUCTIONS_HPP
#define DGWORK_CONSTRUCTIONS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgwork/category.hpp"

namespace dgwork {

using CategoryPtr = std::shared_ptr<const Category>;

inline CategoryPtr share(Category c) { return std::make_shared<const Category>(std::move(c)); }

/// hom^op(X, Y) = hom(Y, X), f ∘op g = (-1)^{|f||g|} g ∘ f.
Category opposite(const Category& c);

/// Objects are pairs "(X,U)", basis vectors "f*g" with total degree.
Category tensor(const Category& a, const Category& b);

struct Amplification {
  CategoryPtr category;
  /// f ↦ E_11 ⊗ f. Not unital for n > 1: the image of id_X is the corner
  /// idempotent, not the identity of X^n.
  Functor inclusion;
};

/// Each object X replaced by X^{⊕n}; hom spaces are n×n matrices of homs.
/// Basis: the identity I = Σ E_ii ⊗ id and E_ij ⊗ f except (1,1,id).
Amplification matrix_amplification(const CategoryPtr& c, std::size_t n);

struct DegreeWindow {
  int lo = -4;
  int hi = 6;
  bool contains(int d) const { return lo <= d && d <= hi; }
};

class DegenerateWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adjoins ε: e → e of degree -1 with dε = id_e. Hom spaces are spanned by
/// words f_k ε ⋯ ε f_0 whose degree lies in the window; anything leaving the
/// window is dropped.
Category drinfeld_quotient(const Category& c, std::size_t e, DegreeWindow window,
                           std::size_t max_epsilons = 64);

enum class Side { A, B };

struct GluedCategory {
  CategoryPtr category;
  std::vector<Side> side;            // per object of category
  std::vector<std::size_t> origin;   // object index inside its side
};

class OrientationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Objects of m.a then m.b; hom(A-side x, B-side y) = M(x, y), zero from the
/// B side to the A side.
GluedCategory glue(const Bimodule& m);
/// Same, checking that m is oriented over (a, b).
GluedCategory glue(const CategoryPtr& a, const CategoryPtr& b, const Bimodule& m);

/// I_A(X, Y) = A(X, Y) over (A, A), actions by composition.
Bimodule diagonal_bimodule(const CategoryPtr& a);

/// M'(X, Y) = G(id) M(FX, GY) F(id) with actions through F and G.
Bimodule restrict_bimodule(const Functor& f, const Functor& g, const Bimodule& m);

/// Bimodule over (A, B) with M(x, y) = k in degree 0 at one pair and zero
/// elsewhere; actions by identities only. Valid when the pair is a "sink".
Bimodule point_bimodule(const CategoryPtr& a, const CategoryPtr& b, std::size_t x, std::size_t y);

/// Constant functor sending everything in c to the object t of target
/// (identities to id_t, other basis vectors to 0). Valid when c has no
/// nonzero composites of non-identity morphisms landing on identities.
Functor constant_functor(const CategoryPtr& c, const CategoryPtr& target, std::size_t t);

}  // namespace dgwork

#endif  // DGWORK_CONSTRUCTIONS_HPP
