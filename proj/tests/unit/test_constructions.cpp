#include <catch2/catch_amalgamated.hpp>

#include "dgwork/catalog.hpp"
#include "dgwork/constructions.hpp"

using namespace dgwork;

TEST_CASE("glue with zero bimodule is a disjoint union", "[constructions]") {
  const auto a = a2().category;
  const auto k = ground_field().category;
  const auto g = glue(a, k, Bimodule::zero(a, k));
  const Category& c = *g.category;
  CHECK(validate(c).ok());
  CHECK(c.num_objects() == 3);
  CHECK(c.total_dimension() == a->total_dimension() + k->total_dimension());
  CHECK(g.side == std::vector<Side>{Side::A, Side::A, Side::B});
  for (std::size_t x = 0; x < 2; ++x) CHECK(c.hom(2, x).empty());
}

TEST_CASE("glue(k, k, k) is the A2 path category", "[constructions]") {
  const auto k = ground_field().category;
  const auto g = glue(k, k, point_bimodule(k, k, 0, 0));
  const Category& c = *g.category;
  const Category ref = *a2().category;
  CHECK(validate(c).ok());
  REQUIRE(c.num_objects() == 2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK(c.hom(x, y).size() == ref.hom(x, y).size());
  }
  CHECK(c.composite(0, 1, 1, 0, 0) == SparseVector::unit(0));
  CHECK(c.hom(1, 0).empty());
}

TEST_CASE("glue of A2 and k along a one-dimensional module", "[constructions]") {
  const auto a = a2().category;
  const auto k = ground_field().category;
  // M(x, pt) = k, zero at y.
  const auto m = point_bimodule(a, k, 0, 0);
  CHECK(validate(m).ok());
  const auto g = glue(a, k, m);
  CHECK(g.category->num_objects() == 3);
  CHECK(validate(*g.category).ok());
  CHECK_THROWS_AS(glue(k, a, m), OrientationError);
}

TEST_CASE("diagonal bimodule", "[constructions]") {
  const auto k = ground_field().category;
  const auto dk = diagonal_bimodule(k);
  CHECK(dk.total_dimension() == 1);
  CHECK(validate(dk).ok());

  const auto a = a2().category;
  const auto da = diagonal_bimodule(a);
  CHECK(da.space(0, 0).size() == 1);
  CHECK(da.space(0, 1).size() == 1);
  CHECK(da.space(1, 0).size() == 0);
  CHECK(da.space(1, 1).size() == 1);
  CHECK(validate(da).ok());

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto r = random_category(seed).category;
    const auto d = diagonal_bimodule(r);
    CHECK(d.total_dimension() == r->total_dimension());
    CHECK(validate(d).ok());
  }
}

TEST_CASE("restrict bimodule", "[constructions]") {
  const auto a = a2().category;
  const auto da = diagonal_bimodule(a);
  const auto id = Functor::identity(a);
  const auto same = restrict_bimodule(id, id, da);
  CHECK(same.spaces == da.spaces);
  CHECK(same.d == da.d);
  CHECK(same.act_a == da.act_a);
  CHECK(same.act_b == da.act_b);

  // Along the corner inclusion: the diagonal of the corner.
  const auto amp = matrix_amplification(a, 2);
  const auto big = diagonal_bimodule(amp.category);
  const auto corner = restrict_bimodule(amp.inclusion, amp.inclusion, big);
  CHECK(validate(corner).ok());
  CHECK(corner.d == da.d);
  CHECK(corner.act_a == da.act_a);
  CHECK(corner.act_b == da.act_b);
  for (std::size_t s = 0; s < da.spaces.size(); ++s) {
    CHECK(corner.spaces[s].size() == da.spaces[s].size());
  }

  // Along a constant functor: constant in the first slot.
  const auto k = ground_field().category;
  const auto cst = constant_functor(a, a, 0);
  const auto r = restrict_bimodule(cst, id, da);
  CHECK(validate(r).ok());
  for (std::size_t y = 0; y < 2; ++y) CHECK(r.space(0, y).size() == r.space(1, y).size());
}
