#include <catch2/catch_amalgamated.hpp>

#include "dgwork/catalog.hpp"
#include "dgwork/cyclic.hpp"

using namespace dgwork;

namespace {

ComputationParams params(std::size_t L, std::size_t N = 4, int lo = -4, int hi = 6) {
  ComputationParams p;
  p.max_bar_length = L;
  p.max_u_power = N;
  p.window = {lo, hi};
  return p;
}

Functor point_inclusion(const CategoryPtr& k, const CategoryPtr& a, std::size_t x) {
  Functor f;
  f.source = k;
  f.target = a;
  f.object_map = {x};
  f.hom_map = {SparseMatrix::identity(1)};
  return f;
}

}  // namespace

TEST_CASE("ground field cyclic invariants", "[cyclic]") {
  Workbench w(ground_field().category, params(6));
  const auto cm = hc_minus(w);
  const auto c = hc(w);
  for (int n = -4; n <= 6; ++n) {
    INFO(n);
    const bool even = n % 2 == 0;
    CHECK(cm.dim(n) == (even && n <= 0 ? 1u : 0u));
    CHECK(c.dim(n) == (even && n >= 0 ? 1u : 0u));
    CHECK(cm.stable(n));
    CHECK(c.stable(n));
  }
  const auto d = degeneration_check(w);
  CHECK(d.degenerate);
  // HH is exact up to degree L - 1 = 5.
  for (const auto& v : d.verdicts) {
    if (v.degree <= 5) CHECK(v.verdict == Verdict::Zero);
  }
  const auto les = long_exact_check(w);
  CHECK(les.ok());
  for (const auto& g : les.degrees) {
    if (g.degree == 0) CHECK(g.rank_p == 1);
  }
  const auto e1 = e1_page(w);
  CHECK(e1.discrepancies.empty());
  for (const auto& e : e1.degrees) CHECK(e.d1_rank == 0);
  CHECK(u_module_check(w).ok());
}

TEST_CASE("dual numbers cyclic homology against the Connes oracle", "[cyclic]") {
  const auto dn = dual_numbers().category;
  Workbench w(dn, params(6));
  const auto c = hc(w);
  const auto oracle = connes_hc_oracle(*dn, 4);
  for (int n = 0; n <= 4; ++n) {
    INFO(n);
    CHECK(c.stable(n));
    CHECK(c.dim(n) == oracle.at(n));
  }
  const auto cm = hc_minus(w);
  CHECK(cm.dim(0) >= 1);
}

TEST_CASE("dual numbers long exact sequence and E1", "[cyclic]") {
  Workbench w(dual_numbers().category, params(6));
  const auto les = long_exact_check(w);
  CHECK(les.ok());
  // In the truncated model the sequence is exact everywhere, stable or not.
  for (const auto& g : les.degrees) {
    INFO(g.degree);
    CHECK(g.exact());
  }
  const auto e1 = e1_page(w);
  CHECK(e1.columns == 4);
  for (const auto& e : e1.degrees) {
    if (e.delta == Verdict::Zero) CHECK(e.d1_rank == 0);
  }
  CHECK(u_module_check(w).ok());
}

TEST_CASE("A2 and A3 degenerate, HC- one copy of k per vertex", "[cyclic]") {
  Workbench wk(ground_field().category, params(6));
  const auto ck = hc_minus(wk);
  for (const auto& e : {a2(), a3()}) {
    INFO(e.name);
    const std::size_t vertices = e.category->num_objects();
    Workbench w(e.category, params(6));
    const auto d = degeneration_check(w);
    CHECK(d.degenerate);
    CHECK(d.stable_degrees > 0);
    const auto cm = hc_minus(w);
    for (const auto& [n, dh] : cm.degrees) {
      if (dh.stable && ck.stable(n)) CHECK(dh.dimension == vertices * ck.dim(n));
    }
    const auto les = long_exact_check(w);
    CHECK(les.ok());
    for (const auto& g : les.degrees) {
      if (g.stable) CHECK(g.rank_p == g.dim_h);
    }
  }
}

TEST_CASE("delta is natural for functors", "[cyclic]") {
  const auto p = params(5);
  const auto k = ground_field().category;
  const auto a = a2().category;
  const auto dn = dual_numbers().category;
  Workbench wk(k, p), wa(a, p), wd(dn, p);
  CHECK(delta_functoriality(Functor::identity(a), wa, wa).ok());
  const auto r1 = delta_functoriality(constant_functor(a, k, 0), wa, wk);
  CHECK(r1.ok());
  CHECK_FALSE(r1.checked.empty());
  CHECK(delta_functoriality(point_inclusion(k, a, 1), wk, wa).ok());
  const auto r2 = delta_functoriality(point_inclusion(k, dn, 0), wk, wd);
  CHECK(r2.ok());
  CHECK(delta_functoriality(Functor::identity(dn), wd, wd).ok());
}

TEST_CASE("graded inputs", "[cyclic]") {
  for (int d : {-1, 1}) {
    Workbench w(exterior_generator(d).category, params(5, 3));
    INFO(d);
    const auto les = long_exact_check(w);
    for (const auto& g : les.degrees) CHECK(g.exact());
    CHECK(u_module_check(w).ok());
  }
}
