#include "helpers.hpp"
#include "hbm/fixed_point.hpp"

#include <doctest.h>

#include <set>

using namespace hbm;
using namespace hbm::test;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Rational> random_distinct(std::mt19937_64& rng, std::size_t count) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    const Rational x = random_rational(rng, -12, 12, 6);
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST_SUITE("fixed_point") {

TEST_CASE("symmetric functions by enumeration") {
  const auto mu = rats({-4, -1, 5});
  CHECK(elementary_symmetric(mu, 0) == 1);
  CHECK(complete_homogeneous(mu, 0) == 1);
  CHECK(elementary_symmetric(mu, 2) == -21);
  CHECK(elementary_symmetric(mu, 3) == 20);
  CHECK(complete_homogeneous(mu, 2) == 21);
  CHECK(complete_homogeneous(rats({1, 1}), 3) == 4);
  CHECK_ERROR_KIND(elementary_symmetric(mu, 4), ErrorKind::InvalidArgument);
}

TEST_CASE("coefficients from moments") {
  const auto c = coefficients_from_moments(FixedPointData::isolated(rats({-4, -1, 5})));
  CHECK(c.c == rats({0, 21, 20}));
  CHECK(coefficients_from_moments(FixedPointData::isolated(rats({0, 0, 0, 0}))).c == rats({0, 0, 0, 0}));
  FixedPointData bad;
  bad.n = 3;
  bad.components = {{Rational(1), 2, std::nullopt}, {Rational(2), 1, std::nullopt}};
  CHECK_ERROR_KIND(coefficients_from_moments(bad), ErrorKind::EulerCharacteristicMismatch);
}

TEST_CASE("coefficients match the elementary-symmetric oracle, with repeats") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    FixedPointData data;
    std::uniform_int_distribution<int> comps(1, 4), mult(1, 2);
    for (int k = comps(rng); k > 0; --k) data.components.push_back({random_rational(rng), mult(rng), std::nullopt});
    data.n = -1;
    for (const auto& comp : data.components) data.n += comp.multiplicity;
    const auto mu = data.expanded();
    const auto c = coefficients_from_moments(data);
    for (int i = 1; i <= data.n + 1; ++i) {
      const Rational sign = i % 2 ? 1 : -1;
      CHECK(c.at(i) == sign * elementary_symmetric(mu, i));
    }
    // localization: each w = mu_j t annihilates the relation
    for (const auto& m : mu) {
      Rational v = power(m, data.n + 1);
      for (int i = 1; i <= data.n + 1; ++i) v -= c.at(i) * power(m, data.n + 1 - i);
      CHECK(v == 0);
    }
    // c_1 = (n + 1) H(mu)
    CHECK(c.at(1) == Rational(data.n + 1) * moment_average(data, 1));
  }
}

TEST_CASE("homogeneity: mu -> lambda mu scales c_i by lambda^i") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = random_distinct(rng, 1 + trial % 6);
    const Rational lambda = random_rational(rng, 1, 7, 3);
    std::vector<Rational> scaled;
    for (const auto& m : mu) scaled.push_back(lambda * m);
    const auto c = coefficients_from_moments(FixedPointData::isolated(mu));
    const auto cs = coefficients_from_moments(FixedPointData::isolated(scaled));
    for (int i = 1; i <= static_cast<int>(mu.size()); ++i) CHECK(cs.at(i) == power(lambda, i) * c.at(i));
  }
}

TEST_CASE("moment powers by hand") {
  const auto powers = moment_powers(FixedPointData::isolated(rats({-4, -1, 5})), 3);
  CHECK(powers[0].lagrange == 1);
  CHECK(powers[1].lagrange == 0);
  CHECK(powers[1].average == 0);
  CHECK(powers[2].lagrange == 21);
  CHECK(powers[2].average == Rational(7, 2));
  CHECK(powers[3].lagrange == 20);
  CHECK(lagrange_sum(rats({-4, -1, 5}), 3) == Rational(-64, 27) + Rational(1, 18) + Rational(125, 54));
  CHECK_ERROR_KIND(moment_powers(FixedPointData::isolated(rats({1, 1})), 2), ErrorKind::RepeatedMomentValues);
}

TEST_CASE("generating-function h_j agrees with multiset enumeration") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> mu;
    for (int k = 0; k < 1 + trial % 5; ++k) mu.push_back(random_rational(rng));
    const auto h = complete_homogeneous_series(mu, 6);
    for (int j = 0; j <= 6; ++j) CHECK(h[j] == complete_homogeneous(mu, j));
  }
}

TEST_CASE("moment identity and recursion on random distinct data") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = random_distinct(rng, 2 + trial % 6);  // n = 1..6
    const FixedPointData data = FixedPointData::isolated(mu);
    const auto powers = moment_powers(data, 8);
    for (const auto& p : powers) CHECK(p.lagrange == complete_homogeneous(mu, p.j));
    for (int d = 0; d < data.n; ++d) CHECK(lagrange_sum(mu, d) == 0);
    CHECK(recursion_check(data, 8).all_passed());
  }
}

TEST_CASE("recursion with a single repeated value reduces to binomials") {
  for (int n = 0; n <= 5; ++n) {
    FixedPointData data;
    data.n = n;
    data.components = {{Rational(3, 2), n + 1, std::nullopt}};
    const auto h = complete_homogeneous_series(data.expanded(), 8);
    for (int j = 0; j <= 8; ++j) CHECK(h[j] == binomial(n + j, j) * power(Rational(3, 2), j));
    CHECK(recursion_check(data, 8).all_passed());
  }
}

TEST_CASE("volume from fixed-point data") {
  const auto mu = rats({-4, -1, 5});
  const VolumeResult v = volume_from_data(FixedPointData::isolated(mu, rats({3, -2, 6})));
  CHECK(v.values == rats({9, 9, 9}));
  CHECK(v.volume == 9);
  CHECK_ERROR_KIND(volume_from_data(FixedPointData::isolated(mu, rats({4, -2, 6}))),
                   ErrorKind::InconsistentFixedPointData);
  CHECK_ERROR_KIND(volume_from_data(FixedPointData::isolated(mu)), ErrorKind::MissingEuler);
  CHECK_ERROR_KIND(volume_from_data(FixedPointData::isolated(rats({1, 1}), rats({1, -1}))),
                   ErrorKind::RepeatedMomentValues);
  const Rational w(5, 3);
  // (mu_1 - mu_2) / e_1 = -2 / w and (mu_2 - mu_1) / e_2 = 2 / (-w)
  CHECK(volume_from_data(FixedPointData::isolated(rats({-1, 1}), {w, -w})).volume == -2 / w);
  CHECK(volume_from_data(FixedPointData::isolated(rats({-1, 1}), {-w, w})).volume == 2 / w);
}

TEST_CASE("volume is translation invariant and scales as lambda^n") {
  for (long a = 1; a <= 4; ++a)
    for (long b = a + 1; b <= 5; ++b) {
      const WeightedCP2 base = cp2_weighted(a, b, 2);
      std::vector<Rational> shifted, scaled, euler;
      for (const auto& comp : base.data.components) {
        shifted.push_back(comp.value + Rational(7, 3));
        scaled.push_back(Rational(3) * comp.value);
        euler.push_back(*comp.euler);
      }
      CHECK(volume_from_data(FixedPointData::isolated(shifted, euler)).volume == base.area);
      CHECK(volume_from_data(FixedPointData::isolated(scaled, euler)).volume == 9 * base.area);
    }
}

TEST_CASE("weighted CP2 closed forms") {
  const WeightedCP2 r = cp2_weighted(1, 3, 3);
  CHECK(r.data.expanded() == rats({-4, -1, 5}));
  CHECK(r.area == 9);
  CHECK(r.coefficients.c == rats({0, 21, 20}));
  CHECK(r.c2_closed == 21);
  CHECK(relation_string(r.coefficients) == "w^3 = 21*w*t^2 + 20*t^3");
  CHECK(r.report.all_passed());
  CHECK(cp2_weighted(1, 2, Rational(5, 7)).coefficients.at(3) == 0);
  for (long a = 1; a <= 6; ++a)
    for (long b = a + 1; b <= 6; ++b)
      for (long s = 1; s <= 3; ++s) {
        const WeightedCP2 x = cp2_weighted(a, b, s);
        const Rational A(s * s);
        CHECK(x.area == A);
        CHECK(x.coefficients.at(2) == A / 3 * (a * a - a * b + b * b));
        CHECK(x.coefficients.at(3) == A * s / 27 * (2 * a * a * a - 3 * a * a * b - 3 * a * b * b + 2 * b * b * b));
      }
  CHECK_ERROR_KIND(cp2_weighted(3, 3, 1), ErrorKind::InvalidWeights);
  CHECK_ERROR_KIND(cp2_weighted(0, 3, 1), ErrorKind::InvalidWeights);
  CHECK_ERROR_KIND(cp2_weighted(1, 3, 0), ErrorKind::InvalidArgument);
}

TEST_CASE("relation rendering") {
  CHECK(relation_string({rats({0, 0, 0})}) == "w^3 = 0");
  CHECK(relation_string({{Rational(1), Rational(-1, 3)}}) == "w^2 = w*t - 1/3*t^2");
  CHECK(relation_string({{Rational(-2)}}) == "w = -2*t");
  const Report rep = relation_report(FixedPointData::isolated(rats({-4, -1, 5}), rats({3, -2, 6})));
  CHECK(rep.all_passed());
  CHECK(rep.str().find("relation: w^3 = 21*w*t^2 + 20*t^3\n") != std::string::npos);
  CHECK(rep.str().find("A: 9\n") != std::string::npos);
}

}
