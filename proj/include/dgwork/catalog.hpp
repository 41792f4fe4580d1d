#ifndef DGWORK_CATALOG_HPP
#define DGWORK_CATALOG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dgwork/constructions.hpp"

namespace dgwork {

/// Dimensions per homological degree, as produced by an oracle.
using DimTable = std::map<int, std::size_t>;

struct ExpectedInvariants {
  std::string oracle;  // empty when no oracle applies
  DimTable hh;
  DimTable hc;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string parameters;
  CategoryPtr category;
  ExpectedInvariants expected;
};

struct Arrow {
  std::string label;
  std::string source;
  std::string target;
};

class CycleDetected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degrees covered by oracle tables built into catalog entries.
inline constexpr int kOracleMaxDegree = 6;

CatalogEntry ground_field();
/// Path category: hom(x, y) spanned by paths x → y, composition by
/// concatenation. Path labels list arrows outermost first: "b.a" = b ∘ a.
CatalogEntry acyclic_quiver(const std::string& name, const std::vector<std::string>& vertices,
                            const std::vector<Arrow>& arrows);
CatalogEntry a2();
CatalogEntry a3();
CatalogEntry dual_numbers();
/// id and ξ of odd degree with ξ² = 0.
CatalogEntry exterior_generator(int degree);

struct RandomBounds {
  std::size_t max_objects = 2;
  std::size_t max_generators = 4;
  int min_degree = -1;
  int max_degree = 1;
};
/// Path category on ≤ max_generators arrows truncated at path length 2 with
/// random monomial relations and a random differential on generators.
CatalogEntry random_category(std::uint64_t seed, RandomBounds bounds = {});

/// "k", "a2", "a3", "dual_numbers", "exterior:<d>", "random:<seed>".
CatalogEntry catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

// Oracles. None of these touch the bar-complex code.

/// HH of a path category from the two-term resolution of the diagonal:
/// ⊕_α e_s A e_t → ⊕_v e_v A e_v.
DimTable quiver_hh_oracle(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows);

/// HH_0..max_degree of k[x]/x² from its 2-periodic resolution over A ⊗ A^op.
DimTable dual_numbers_hh_oracle(int max_degree);

/// Cyclic homology of a degree-zero category from Connes' complex
/// C^λ_n = C_n / (1 - t) on unnormalized cyclic words.
DimTable connes_hc_oracle(const Category& c, int max_degree);

}  // namespace dgwork

#endif  // DGWORK_CATALOG_HPP
