#include <catch2/catch_amalgamated.hpp>

#include "dgwork/catalog.hpp"
#include "dgwork/hochschild.hpp"

using namespace dgwork;

namespace {

ComputationParams params(std::size_t L, int lo = -4, int hi = 6) {
  ComputationParams p;
  p.max_bar_length = L;
  p.window = {lo, hi};
  return p;
}

}  // namespace

TEST_CASE("ground field complex", "[hochschild]") {
  const MixedComplex mc(ground_field().category, 4, -4, 6);
  CHECK(mc.total_words() == 1);
  CHECK(mc.dimension(0) == 1);
  const auto h = hh(ground_field().category, params(4));
  CHECK(h.dim(0) == 1);
  for (int n = 1; n <= 3; ++n) CHECK(h.dim(n) == 0);
  CHECK(h.stable(0));
}

TEST_CASE("mixed complex identities on catalog entries", "[hochschild]") {
  for (const auto& name : {"k", "a2", "a3", "dual_numbers"}) {
    const MixedComplex mc(catalog_entry(name).category, 5, -2, 7);
    const auto r = check_mixed_identities(mc);
    INFO(name);
    CHECK(r.ok());
    CHECK(r.words_checked > 0);
  }
  for (int d : {-3, -1, 1, 3}) {
    const MixedComplex mc(exterior_generator(d).category, 5, -12, 12);
    const auto r = check_mixed_identities(mc);
    INFO(d);
    CHECK(r.b_squared_failures == 0);
    CHECK(r.B_squared_failures == 0);
    CHECK(r.anticommutator_failures == 0);
    CHECK(r.reducedness_failures == 0);
  }
}

TEST_CASE("mixed complex identities on random categories", "[hochschild]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MixedComplex mc(random_category(seed).category, 3, -8, 8);
    const auto r = check_mixed_identities(mc);
    INFO(seed);
    CHECK(r.b_squared_failures == 0);
    CHECK(r.B_squared_failures == 0);
    CHECK(r.anticommutator_failures == 0);
  }
}

TEST_CASE("dual numbers word counts and HH", "[hochschild]") {
  const MixedComplex mc(dual_numbers().category, 4, -4, 6);
  // Head in {1, x}, every tail letter is x.
  for (int n = 0; n <= 4; ++n) CHECK(mc.dimension(n) == 2);
  const auto h = hh(dual_numbers().category, params(6));
  const auto oracle = dual_numbers_hh_oracle(4);
  for (int n = 0; n <= 4; ++n) {
    INFO(n);
    CHECK(h.dim(n) == oracle.at(n));
    CHECK(h.stable(n));
  }
}

TEST_CASE("quiver HH agrees with the resolution oracle", "[hochschild]") {
  for (const auto& e : {a2(), a3()}) {
    const auto h = hh(e.category, params(5));
    for (int n = 0; n <= 4; ++n) {
      INFO(e.name << " degree " << n);
      CHECK(h.dim(n) == e.expected.hh.at(n));
    }
  }
}

TEST_CASE("representatives are cycles and independent", "[hochschild]") {
  Workbench w(dual_numbers().category, params(5));
  const auto t = w.total(5, TotalKind::Hochschild, 1);
  for (int m = 0; m <= 3; ++m) {
    const QuotientHomology q(t, m, true);
    for (const auto& z : q.representatives()) CHECK(q.is_cycle(z));
    for (std::size_t i = 0; i < q.dimension(); ++i) {
      CHECK(q.coordinates(q.representatives()[i]) == SparseVector::unit(i));
    }
  }
}

TEST_CASE("exterior generator HH is stable under L to L+1", "[hochschild]") {
  for (int d : {-1, 3}) {
    const auto h = hh(exterior_generator(d).category, params(5, -4, 6));
    std::size_t stable = 0;
    for (const auto& [n, dh] : h.degrees) stable += dh.stable;
    INFO(d);
    CHECK(stable == h.degrees.size());
  }
}

TEST_CASE("Kunneth", "[hochschild]") {
  const auto k = ground_field().category;
  const auto dn = dual_numbers().category;
  const auto p = params(5, -4, 6);
  const auto r1 = kunneth_check(k, dn, p);
  CHECK(r1.ok());
  const auto r2 = kunneth_check(dn, dn, p);
  CHECK(r2.ok());
  CHECK(r2.degrees.size() >= 4);
}

TEST_CASE("gluing additivity", "[hochschild]") {
  const auto k = ground_field().category;
  const auto a = a2().category;
  const auto p = params(5, -4, 6);
  const auto r0 = gluing_additivity_check(a, k, Bimodule::zero(a, k), p);
  CHECK(r0.ok());
  const auto r1 = gluing_additivity_check(k, k, point_bimodule(k, k, 0, 0), p);
  CHECK(r1.ok());
  CHECK(r1.glued_words == r1.a_words + r1.b_words);
  const auto r2 = gluing_additivity_check(a, k, point_bimodule(a, k, 0, 0), p);
  CHECK(r2.ok());
}

TEST_CASE("induced maps", "[hochschild]") {
  const auto p = params(4, -4, 6);
  const auto a = a2().category;
  Workbench wa(a, p);
  const auto id = hh_induced_map(Functor::identity(a), wa, wa);
  for (const auto& [m, mat] : id.matrices) CHECK(mat == SparseMatrix::identity(mat.cols()));

  const auto k = ground_field().category;
  const auto amp = matrix_amplification(k, 2);
  Workbench wk(k, p), wk2(amp.category, p);
  const auto inc = hh_induced_map(amp.inclusion, wk, wk2);
  REQUIRE(inc.matrices.count(0));
  CHECK(rank(inc.matrices.at(0)) == 1);
  CHECK(inc.matrices.at(0).rows() == 1);

  const auto cst = constant_functor(a, k, 0);
  const auto cm = hh_induced_map(cst, wa, wk);
  REQUIRE(cm.matrices.count(0));
  CHECK(rank(cm.matrices.at(0)) <= 1);

  // Functoriality: (G F)^* = G^* F^* for the inclusion of k at x in a2
  // followed by the constant functor back to k.
  Functor f;
  f.source = k;
  f.target = a;
  f.object_map = {0};
  f.hom_map = {SparseMatrix::identity(1)};
  REQUIRE(validate(f).ok());
  const auto gf = Functor::compose(cst, f);
  const auto m_f = hh_induced_map(f, wk, wa);
  const auto m_gf = hh_induced_map(gf, wk, wk);
  REQUIRE(m_gf.matrices.count(0));
  CHECK(m_gf.matrices.at(0) == cm.matrices.at(0) * m_f.matrices.at(0));
  CHECK(m_gf.matrices.at(0) == SparseMatrix::identity(1));
}
