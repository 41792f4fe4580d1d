#include <catch2/catch_amalgamated.hpp>

#include "dgwork/catalog.hpp"
#include "dgwork/constructions.hpp"
#include "dgwork/linalg.hpp"

using namespace dgwork;

namespace {

std::size_t total_in_degree(const Category& c, int d) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      for (const auto& e : c.hom(x, y).elements()) n += (e.degree == d);
    }
  }
  return n;
}

std::size_t hom_homology(const Category& c, std::size_t x, std::size_t y) {
  const auto d = c.differential_matrix(x, y);
  return d.cols() - 2 * rank(d);
}

}  // namespace

TEST_CASE("validate on basic categories", "[dgcore]") {
  CHECK(validate(*ground_field().category).ok());
  CHECK(validate(*a2().category).ok());
  CHECK(validate(*a3().category).ok());
  CHECK(validate(*dual_numbers().category).ok());
  CHECK(validate(*exterior_generator(1).category).ok());
  CHECK(validate(*exterior_generator(-1).category).ok());
  CHECK_THROWS(exterior_generator(2));
}

TEST_CASE("d(id) != 0 is a unit axiom failure", "[dgcore]") {
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.add_morphism(0, 0, {"t", 1});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  c.set_differential(0, 0, 0, SparseVector::unit(1));
  const auto r = validate(c);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.has_malformed());
  CHECK(r.has_axiom_failure("unit"));
}

TEST_CASE("degree mismatches are malformed, not axiom failures", "[dgcore]") {
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.add_morphism(0, 0, {"t", 0});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  c.set_differential(0, 0, 1, SparseVector::unit(1));  // degree 0 → 0
  const auto r = validate(c);
  CHECK(r.has_malformed());
  CHECK_FALSE(r.has_axiom_failure("d_squared"));
}

TEST_CASE("associativity and Leibniz failures are detected", "[dgcore]") {
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.add_morphism(0, 0, {"a", 0});
  c.add_morphism(0, 0, {"b", 0});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  c.set_composite(0, 0, 0, 1, 1, SparseVector::unit(2));  // a∘a = b, b∘a = 0, a∘b = b
  c.set_composite(0, 0, 0, 1, 2, SparseVector::unit(2));
  CHECK(validate(c).has_axiom_failure("associativity"));

  Category l({"pt"});
  l.add_morphism(0, 0, {"id", 0});
  l.add_morphism(0, 0, {"e", -1});
  l.add_morphism(0, 0, {"f", 0});
  l.set_identity(0, 0);
  l.fill_identity_composites();
  l.set_differential(0, 0, 1, SparseVector::unit(2));  // de = f, f∘e = e
  l.set_composite(0, 0, 0, 2, 1, SparseVector::unit(1));
  CHECK(validate(l).has_axiom_failure("leibniz"));
}

TEST_CASE("opposite", "[dgcore]") {
  const auto k = ground_field().category;
  CHECK(opposite(*k) == *k);
  const auto a = a2().category;
  const Category o = opposite(*a);
  CHECK(validate(o).ok());
  CHECK(o.hom(1, 0).size() == 1);
  CHECK(o.hom(0, 1).empty());
  CHECK(opposite(o) == *a);

  const auto ex = exterior_generator(1).category;
  const Category eo = opposite(*ex);
  CHECK(validate(eo).ok());
  CHECK(opposite(eo) == *ex);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = random_category(seed).category;
    const Category ro = opposite(*r);
    CHECK(validate(ro).ok());
    CHECK(opposite(ro) == *r);
  }
}

TEST_CASE("tensor", "[dgcore]") {
  const auto k = ground_field().category;
  const auto a = a2().category;
  const Category ka = tensor(*k, *a);
  CHECK(validate(ka).ok());
  CHECK(ka.num_objects() == 2);
  CHECK(ka.total_dimension() == a->total_dimension());

  const Category aa = tensor(*a, *a);
  CHECK(validate(aa).ok());
  CHECK(aa.num_objects() == 4);
  CHECK(aa.total_dimension() == a->total_dimension() * a->total_dimension());
  CHECK(validate(tensor(*a, opposite(*a))).ok());

  // Graded convolution of degree counts.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = random_category(seed).category;
    const auto e = exterior_generator(1).category;
    const Category t = tensor(*r, *e);
    CHECK(validate(t).ok());
    for (int d = -3; d <= 4; ++d) {
      std::size_t conv = 0;
      for (int i = -3; i <= 3; ++i) {
        std::size_t pairs = 0;
        for (std::size_t x = 0; x < r->num_objects(); ++x) {
          for (std::size_t y = 0; y < r->num_objects(); ++y) {
            std::size_t ri = 0;
            for (const auto& b : r->hom(x, y).elements()) ri += (b.degree == i);
            std::size_t ej = 0;
            for (const auto& b : e->hom(0, 0).elements()) ej += (b.degree == d - i);
            pairs += ri * ej;
          }
        }
        conv += pairs;
      }
      CHECK(total_in_degree(t, d) == conv);
    }
  }
}

TEST_CASE("matrix amplification", "[dgcore]") {
  const auto a = a2().category;
  CHECK(*matrix_amplification(a, 1).category == *a);

  const auto k = ground_field().category;
  const auto k2 = matrix_amplification(k, 2);
  CHECK(k2.category->hom(0, 0).size() == 4);
  CHECK(validate(*k2.category).ok());

  const auto a22 = matrix_amplification(a, 2);
  CHECK(validate(*a22.category).ok());
  CHECK(a22.category->total_dimension() == 4 * a->total_dimension());

  // The corner inclusion respects d and composition; only the unit fails.
  const auto r = validate(a22.inclusion);
  CHECK_FALSE(r.has_malformed());
  CHECK_FALSE(r.has_axiom_failure("composition"));
  CHECK_FALSE(r.has_axiom_failure("differential"));
  CHECK_FALSE(a22.inclusion.unital());

  const auto rc = random_category(3).category;
  CHECK(validate(*matrix_amplification(rc, 2).category).ok());
}

TEST_CASE("drinfeld quotient", "[dgcore]") {
  const auto k = ground_field().category;
  const Category q = drinfeld_quotient(*k, 0, {-3, 3});
  CHECK(validate(q).ok());
  CHECK(q.hom(0, 0).size() == 4);  // id, ε, ε², ε³
  CHECK(hom_homology(q, 0, 0) == 0);

  const auto a = a2().category;
  const Category qa = drinfeld_quotient(*a, 0, {-3, 3});
  CHECK(validate(qa).ok());
  CHECK(qa.hom(1, 1).size() == 1);
  CHECK(hom_homology(qa, 0, 1) == 0);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (const auto& e : qa.hom(x, y).elements()) {
        CHECK(e.degree >= -3);
        CHECK(e.degree <= 3);
      }
    }
  }
  CHECK_THROWS_AS(drinfeld_quotient(*a, 0, {0, 3}), DegenerateWindow);
  CHECK_THROWS_AS(drinfeld_quotient(*a, 0, {-2, -1}), DegenerateWindow);
}

TEST_CASE("functor composition and identity", "[dgcore]") {
  const auto a = a2().category;
  const auto id = Functor::identity(a);
  CHECK(validate(id).ok());
  const auto twice = Functor::compose(id, id);
  CHECK(twice.hom_map == id.hom_map);
  const auto k = ground_field().category;
  const auto cst = constant_functor(a, k, 0);
  CHECK(validate(cst).ok());
}
