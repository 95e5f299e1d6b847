#pragma once

#include "hbm/error.hpp"
#include "hbm/linalg.hpp"

#include <doctest.h>

#include <random>

#define CHECK_ERROR_KIND(expr, expected)                       \
  do {                                                         \
    try {                                                      \
      (void)(expr);                                            \
      FAIL_CHECK("no error from " #expr);                      \
    } catch (const hbm::Error& caught_) {                      \
      CHECK_MESSAGE(caught_.kind() == (expected), caught_.what()); \
    }                                                          \
  } while (0)

namespace hbm::test {

inline RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<RatVector> rs;
  for (const auto& r : rows) {
    RatVector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(v);
  }
  return RatMatrix::from_rows(rs, rows.empty() ? 0 : rows.front().size());
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, int lo = -9, int hi = 9, int den = 5) {
  std::uniform_int_distribution<int> n(lo, hi), q(1, den);
  Rational x(n(rng), q(rng));
  x.canonicalize();
  return x;
}

}  // namespace hbm::test
