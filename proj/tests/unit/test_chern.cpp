#include <catch2/catch_amalgamated.hpp>

#include "dgwork/catalog.hpp"
#include "dgwork/chern.hpp"

using namespace dgwork;

namespace {

ComputationParams params(std::size_t L = 4, std::size_t N = 3) {
  ComputationParams p;
  p.max_bar_length = L;
  p.max_u_power = N;
  p.window = {-2, 3};
  return p;
}

K0Class representable(const CategoryPtr& c, std::size_t x) {
  return {c, {ProjectiveSummand::representable(*c, x)}};
}

}  // namespace

TEST_CASE("ch on the ground field", "[chern]") {
  const auto k = ground_field().category;
  Workbench w(k, params());
  const auto one = ch(representable(k, 0), w);
  CHECK(one.coordinates.nnz() == 1);
  CHECK(one.stable);
  K0Class zero{k, {}};
  CHECK(ch(zero, w).coordinates.empty());
  ProjectiveSummand z = ProjectiveSummand::representable(*k, 0);
  z.e[0][0] = SparseVector{};
  CHECK(ch(K0Class{k, {z}}, w).coordinates.empty());
}

TEST_CASE("ch is additive, kills cones and flips under shift", "[chern]") {
  const auto a = a2().category;
  Workbench w(a, params());
  const auto x = representable(a, 0), y = representable(a, 1);
  CHECK(ch(x + y, w).coordinates == ch(x, w).coordinates + ch(y, w).coordinates);
  CHECK(ch(x + x.shifted(), w).coordinates.empty());
  CHECK(ch(x.shifted(), w).coordinates == -ch(x, w).coordinates);
}

TEST_CASE("non-idempotents and graded inputs are rejected", "[chern]") {
  const auto dn = dual_numbers().category;
  ProjectiveSummand s = ProjectiveSummand::representable(*dn, 0);
  s.e[0][0] = SparseVector::unit(1);  // x with x² = 0
  CHECK_THROWS_AS(check_k0_class(K0Class{dn, {s}}), InconsistentInput);
  const auto ex = exterior_generator(1).category;
  CHECK_THROWS_AS(check_k0_class(representable(ex, 0)), UnsupportedInput);
}

TEST_CASE("rank-one idempotent over 2x2 matrices matches the corner", "[chern]") {
  const auto k = ground_field().category;
  const auto amp = matrix_amplification(k, 2);
  Workbench wk(k, params()), w2(amp.category, params());
  const K0Class pushed = push_forward(amp.inclusion, representable(k, 0), amp.category);
  REQUIRE_NOTHROW(check_k0_class(pushed));
  const auto lhs = ch(pushed, w2);
  const auto f = hh_induced_map(amp.inclusion, wk, w2);
  CHECK(lhs.coordinates == f.matrices.at(0).apply(ch(representable(k, 0), wk).coordinates));
  // The full identity is twice the corner in HH_0.
  CHECK(ch(representable(amp.category, 0), w2).coordinates == Scalar(2) * lhs.coordinates);
}

TEST_CASE("ch commutes with unital functors", "[chern]") {
  const auto a = a2().category;
  const auto k = ground_field().category;
  Workbench wa(a, params()), wk(k, params());
  const auto cst = constant_functor(a, k, 0);
  const auto f = hh_induced_map(cst, wa, wk);
  for (std::size_t x = 0; x < 2; ++x) {
    const auto cls = representable(a, x);
    CHECK(ch(push_forward(cst, cls, k), wk).coordinates == f.matrices.at(0).apply(ch(cls, wa).coordinates));
  }
}

TEST_CASE("quiver arrows and diagonal resolutions", "[chern]") {
  CHECK(quiver_arrows(*ground_field().category).empty());
  CHECK(quiver_arrows(*a2().category).size() == 1);
  const auto arrows3 = quiver_arrows(*a3().category);
  CHECK(arrows3.size() == 2);
  for (const auto& e : {ground_field(), a2(), a3()}) {
    INFO(e.name);
    const auto dc = diagonal_class(e.category);
    CHECK(dc.resolution.exact);
    CHECK(dc.cartan_consistent);
  }
  CHECK_THROWS_AS(quiver_arrows(*dual_numbers().category), UnsupportedInput);
  // M at x gives y <- x -> pt; M at y gives x -> y -> pt with the path killed.
  const auto k = ground_field().category;
  const auto a = a2().category;
  CHECK(diagonal_resolution(*glue(a, k, point_bimodule(a, k, 0, 0)).category).exact);
  CHECK_FALSE(diagonal_resolution(*glue(a, k, point_bimodule(a, k, 1, 0)).category).exact);
}

TEST_CASE("Kunneth split of products and zero", "[chern]") {
  const auto a = a2().category;
  const auto k = ground_field().category;
  const auto t = share(tensor(*a, *k));
  Workbench wt(t, params()), wa(a, params()), wk(k, params());
  HH0Class zero;
  zero.stable = true;
  CHECK(kunneth_split(zero, wt, wa, wk).block.is_zero());
  const auto x = ch(representable(t, 1), wt);
  const auto ks = kunneth_split(x, wt, wa, wk);
  CHECK(ks.reconstructs);
  CHECK(ks.stable);
  CHECK(ks.block.nnz() >= 1);
  const SparseMatrix v = vertex_basis(wa);
  CHECK(rank(v) == 2);
}

TEST_CASE("pairing is invertible for quivers", "[chern]") {
  for (const auto& e : {ground_field(), a2(), a3()}) {
    INFO(e.name);
    const auto r = pairing_check(e.category, params());
    CHECK(r.invertible);
    CHECK(r.stable);
    CHECK(r.resolution_exact);
    CHECK(r.determinant != 0);
  }
}

TEST_CASE("phi0 of diagonal classes vanishes", "[chern]") {
  for (const auto& e : {ground_field(), a2(), a3()}) {
    INFO(e.name);
    const auto r = phi0_diagonal(e.category, params(4, 3));
    CHECK(r.verdict == Verdict::Zero);
  }
}

TEST_CASE("gluing components", "[chern]") {
  const auto k = ground_field().category;
  const auto a = a2().category;
  const auto p = params();
  const auto r0 = gluing_component_check(a, k, Bimodule::zero(a, k), p);
  CHECK(r0.ok());
  CHECK(r0.expected_cb.is_zero());
  const auto r1 = gluing_component_check(k, k, point_bimodule(k, k, 0, 0), p);
  CHECK(r1.ok());
  REQUIRE(r1.resolution_route_agrees.has_value());
  CHECK(*r1.resolution_route_agrees);
  CHECK(r1.expected_cb == SparseMatrix::from_dense({{-1}}));
  const auto r2 = gluing_component_check(a, k, point_bimodule(a, k, 0, 0), p);
  CHECK(r2.ok());
  CHECK(r2.resolution_route_agrees.value_or(false));
  const auto r3 = gluing_component_check(a, k, point_bimodule(a, k, 1, 0), p);
  CHECK(r3.ok());
  CHECK_FALSE(r3.resolution_route_agrees.has_value());
}
