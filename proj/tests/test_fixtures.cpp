#include "helpers.hpp"
#include "module_helpers.hpp"
#include "hbm/hirsch_brown.hpp"

#include <doctest.h>

#include <set>

using namespace hbm;
using namespace hbm::test;

TEST_SUITE("fixtures") {

TEST_CASE("catalogue") {
  CHECK(fixture_names().size() == 6);
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK_FALSE(fixture_description(name).empty());
    CHECK_NOTHROW(validate(fixture(name), 10));
  }
  CHECK_ERROR_KIND(fixture_text("nope"), ErrorKind::InvalidArgument);
}

TEST_CASE("at least twenty valid variants with distinct names") {
  const auto variants = fixture_variants();
  CHECK(variants.size() >= 20);
  std::set<std::string> names;
  for (const auto& [name, d] : variants) {
    CAPTURE(name);
    names.insert(name);
    CHECK_NOTHROW(validate(d, 10));
  }
  CHECK(names.size() == variants.size());
}

TEST_CASE("conjugation preserves cohomology and is deterministic") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const EquivariantDatum a = fixture(name);
    const EquivariantDatum b = conjugate(a, 42);
    CHECK(conjugate(a, 42) == b);
    const TruncatedModule ma = module_of(a, 6), mb = module_of(b, 6);
    CHECK(cohomology_cartan(ma).dims == cohomology_cartan(mb).dims);
    for (int m = 0; m <= a.complex().top_degree(); ++m)
      CHECK(ma.hodge().harmonic_dim(m) == mb.hodge().harmonic_dim(m));
  }
}

TEST_CASE("direct sums add and tensor products convolve Betti numbers") {
  const EquivariantDatum p = fixture("poly-rot-2"), s = fixture("sphere-rotation"), f = fixture("free-rotation");
  const auto betti = [](const EquivariantDatum& d) {
    const HodgeData h(d.complex());
    std::vector<std::size_t> b;
    for (int m = 0; m <= d.complex().top_degree(); ++m) b.push_back(h.harmonic_dim(m));
    return b;
  };
  const auto bp = betti(p), bs = betti(s), bf = betti(f);
  const auto sum = betti(direct_sum(p, s));
  for (std::size_t m = 0; m < sum.size(); ++m)
    CHECK(sum[m] == (m < bp.size() ? bp[m] : 0) + (m < bs.size() ? bs[m] : 0));
  const auto prod = betti(tensor(s, f));
  for (std::size_t m = 0; m < prod.size(); ++m) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i <= m; ++i)
      if (i < bs.size() && m - i < bf.size()) expected += bs[i] * bf[m - i];
    CHECK(prod[m] == expected);
  }
  CHECK(tensor(s, f).rank() == 2);
  CHECK_ERROR_KIND(direct_sum(fixture("su2-free"), f), ErrorKind::InvalidArgument);
}

TEST_CASE("equivariant cohomology of a direct sum is additive") {
  const EquivariantDatum a = fixture("poly-rot-2"), b = fixture("sphere-rotation");
  const auto ca = cohomology_cartan(module_of(a, 8)).dims;
  const auto cb = cohomology_cartan(module_of(b, 8)).dims;
  const auto cs = cohomology_cartan(module_of(direct_sum(a, b), 8)).dims;
  for (std::size_t m = 0; m < cs.size(); ++m) CHECK(cs[m] == ca[m] + cb[m]);
}

}
