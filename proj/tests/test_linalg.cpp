#include "helpers.hpp"
#include "hbm/error.hpp"
#include "hbm/rational.hpp"

#include <doctest.h>

using namespace hbm;
using namespace hbm::test;

TEST_SUITE("linalg") {

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("+7/2") == Rational(7, 2));
  Rational x(-6, 4);
  x.canonicalize();
  CHECK(to_string(x) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  for (const char* bad : {"1/0", "", "abc", "1/", "/2", "1.5", "2/-3", " 1"}) {
    CAPTURE(bad);
    CHECK_ERROR_KIND(parse_rational(bad), ErrorKind::ParseError);
  }
}

TEST_CASE("binomial matches Pascal's triangle") {
  std::vector<std::vector<long>> pascal{{1}};
  for (int n = 1; n <= 14; ++n) {
    std::vector<long> row(n + 1, 1);
    for (int k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    pascal.push_back(row);
  }
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("sparse storage drops zeros") {
  RatMatrix m(2, 2);
  m.set(0, 1, 3);
  m.add(0, 1, -3);
  CHECK(m.is_zero());
  m.set(1, 0, 5);
  CHECK(m.nonzeros() == 1);
  CHECK(m.transpose().at(0, 1) == 5);
}

TEST_CASE("rank, kernel and image of a hand matrix") {
  const RatMatrix m = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto rki = rank_kernel_image(m);
  CHECK(rki.rank == 2);
  REQUIRE(rki.kernel_basis.size() == 1);
  CHECK(rki.kernel_basis[0] == vec({-1, -1, 1}));
  REQUIRE(rki.image_basis.size() == 2);
  CHECK(rki.image_basis[0] == m.column(0));
  CHECK(rki.image_basis[1] == m.column(1));
}

TEST_CASE("rank-nullity and kernel property on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    const RatMatrix m = random_matrix(rng, r, c, -1, 1);
    const auto rki = rank_kernel_image(m);
    CHECK(rki.rank + rki.kernel_basis.size() == c);
    CHECK(rank(m.transpose()) == rki.rank);
    for (const auto& k : rki.kernel_basis) CHECK(is_zero(m * k));
    CHECK(rank(RatMatrix::from_columns(r, rki.image_basis)) == rki.rank);
    CHECK(rank(RatMatrix::from_columns(c, rki.kernel_basis)) == rki.kernel_basis.size());
  }
}

TEST_CASE("solve finds preimages and reports inconsistency") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix m = random_matrix(rng, 4, 3);
    RatVector x0;
    for (int i = 0; i < 3; ++i) x0.push_back(random_rational(rng));
    const auto x = solve(m, m * x0);
    REQUIRE(x);
    CHECK(m * *x == m * x0);
  }
  const RatMatrix m = dense({{1, 0}, {0, 0}});
  CHECK_FALSE(solve(m, vec({0, 1})));
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix m = random_matrix(rng, 4, 4);
    if (rank(m) < 4) {
      CHECK_ERROR_KIND(inverse(m), ErrorKind::InvalidArgument);
      continue;
    }
    ++tested;
    CHECK(m * inverse(m) == RatMatrix::identity(4));
    CHECK(inverse(m) * m == RatMatrix::identity(4));
  }
  CHECK(tested > 10);
}

TEST_CASE("positive definiteness") {
  CHECK_NOTHROW(require_positive_definite(dense({{2, 1}, {1, 3}})));
  for (const auto& bad : {dense({{1, 2}, {2, 1}}), dense({{0}}), dense({{1, 1}, {0, 1}}), dense({{-1}})}) {
    CHECK_ERROR_KIND(require_positive_definite(bad), ErrorKind::InnerNotPositiveDefinite);
  }
  // Gram matrices B^T B of full-rank B are positive definite
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix b = random_matrix(rng, 4, 3);
    if (rank(b) < 3) continue;
    CHECK_NOTHROW(require_positive_definite(b.transpose() * b));
  }
}

TEST_CASE("orthogonal projector with a non-identity inner product") {
  const RatMatrix a = dense({{2, 1}, {1, 3}});
  const RatMatrix p = orthogonal_projector({vec({1, 0})}, a, 2);
  // <e0, A v> / <e0, A e0> = (2 v0 + v1) / 2
  CHECK(p == RatMatrix::from_rows({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(0)}}, 2));
  CHECK(orthogonal_project({vec({1, 0})}, a, vec({0, 1})) == RatVector{Rational(1, 2), Rational(0)});

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix b = random_matrix(rng, 4, 4);
    if (rank(b) < 4) continue;
    const RatMatrix inner = b.transpose() * b;
    const RatMatrix s = random_matrix(rng, 4, 2);
    if (rank(s) < 2) continue;
    const RatMatrix proj = orthogonal_projector({s.column(0), s.column(1)}, inner, 4);
    CHECK(proj * proj == proj);
    CHECK((inner * proj).is_symmetric());
    CHECK(proj * s.column(1) == s.column(1));
  }
}

}
