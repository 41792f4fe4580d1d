#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dgwork/linalg.hpp"

using namespace dgwork;

namespace {

SparseMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   int density_percent, int bound) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> value(-bound, bound);
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < rows; ++i) {
      if (coin(rng) < density_percent) e.emplace_back(i, value(rng));
    }
    m.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return m;
}

}  // namespace

TEST_CASE("canonical rationals", "[exactla]") {
  CHECK(parse_canonical("1/2") == Scalar(1, 2));
  CHECK(parse_canonical("-3") == Scalar(-3));
  CHECK(parse_canonical("0") == Scalar(0));
  CHECK_FALSE(parse_canonical("2/4"));
  CHECK_FALSE(parse_canonical("3/1"));
  CHECK_FALSE(parse_canonical("1/-2"));
  CHECK_FALSE(parse_canonical("+1"));
  CHECK_FALSE(parse_canonical("01"));
  CHECK_FALSE(parse_canonical("-0"));
  CHECK_FALSE(parse_canonical("0/5"));
  Scalar x(-6, 4);
  x.canonicalize();
  CHECK(to_string(x) == "-3/2");
}

TEST_CASE("rank examples", "[exactla]") {
  CHECK(rank(SparseMatrix(0, 0)) == 0);
  CHECK(rank(SparseMatrix::identity(3)) == 3);
  CHECK(rank(SparseMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples", "[exactla]") {
  CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 2)).size() == 2);

  const auto m = SparseMatrix::from_dense({{1, 1}});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]).empty());
  CHECK(k[0].at(0) == -k[0].at(1));
  CHECK(k[0].at(0) != 0);
}

TEST_CASE("quotient examples", "[exactla]") {
  const std::vector<SparseVector> plane{SparseVector::unit(0), SparseVector::unit(1)};
  CHECK(quotient_basis(plane, plane, 2).empty());
  CHECK(quotient_basis({}, plane, 2).size() == 2);

  // b = [[0,1],[0,0]] on k^2: ker b = span(e0), im b = span(e0).
  const auto b = SparseMatrix::from_dense({{0, 1}, {0, 0}});
  const auto cycles = kernel_basis(b);
  const std::vector<SparseVector> boundaries{b.column(0), b.column(1)};
  std::vector<SparseVector> nonzero;
  for (const auto& v : boundaries) {
    if (!v.empty()) nonzero.push_back(v);
  }
  CHECK(quotient_basis(nonzero, cycles, 2).empty());

  CHECK_THROWS_AS(quotient_basis({SparseVector::unit(1)}, {SparseVector::unit(0)}, 2),
                  InconsistentInput);
}

TEST_CASE("solve examples", "[exactla]") {
  const SparseVector v = SparseVector::from_entries({{0, 3}, {2, Scalar(-1, 7)}});
  const auto x = solve(SparseMatrix::identity(3), v);
  REQUIRE(x);
  CHECK(*x == v);
  CHECK_FALSE(solve(SparseMatrix(2, 2), SparseVector::unit(1)));
  const auto half = solve(SparseMatrix::from_dense({{2}}), SparseVector::unit(0));
  REQUIRE(half);
  CHECK(half->at(0) == Scalar(1, 2));
}

TEST_CASE("inverse", "[exactla]") {
  const auto m = SparseMatrix::from_dense({{1, 2}, {3, 4}});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == SparseMatrix::identity(2));
  CHECK(*inv * m == SparseMatrix::identity(2));
  CHECK_FALSE(inverse(SparseMatrix::from_dense({{1, 2}, {2, 4}})));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto r = random_integer_matrix(rng, 5, 5, 60, 4);
    const auto ri = inverse(r);
    CHECK(ri.has_value() == (determinant(r) != 0));
    if (ri) CHECK(r * *ri == SparseMatrix::identity(5));
  }
}

TEST_CASE("determinant", "[exactla]") {
  CHECK(determinant(SparseMatrix::from_dense({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(SparseMatrix::from_dense({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(SparseMatrix::from_dense({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("rank-nullity and solve round-trip on random matrices", "[exactla][property]") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(0, 9);
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    const auto m = random_integer_matrix(rng, r, c, 40, 3);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) CHECK(m.apply(v).empty());

    // Targets in the image are always solvable and solutions are exact.
    std::uniform_int_distribution<int> value(-2, 2);
    std::vector<SparseVector::Entry> xe;
    for (std::size_t j = 0; j < c; ++j) xe.emplace_back(j, value(rng));
    const auto target = m.apply(SparseVector::from_entries(xe));
    const auto x = solve(m, target);
    REQUIRE(x);
    CHECK(m.apply(*x) == target);
  }
}

TEST_CASE("rank over Q agrees with rank mod p for some of three primes", "[exactla][property]") {
  std::mt19937_64 rng(77);
  const std::uint64_t primes[] = {1000000007ULL, 998244353ULL, 2147483647ULL};
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_integer_matrix(rng, 7, 8, 50, 50);
    const auto rq = rank(m);
    int agree = 0;
    for (auto p : primes) {
      const auto rp = rank_mod_p(m, p);
      CHECK(rp <= rq);
      if (rp == rq) ++agree;
    }
    CHECK(agree >= 1);
  }
  CHECK_THROWS_AS(rank_mod_p(SparseMatrix::identity(2), 12), InconsistentInput);
}
