#include "helpers.hpp"
#include "module_helpers.hpp"
#include "hbm/hirsch_brown.hpp"

#include <doctest.h>

using namespace hbm;
using namespace hbm::test;

namespace {

ModuleElement harmonic_element(const TruncatedModule& m, const MinimalModel& mm, std::size_t j, std::size_t mono = 0) {
  return m.embed(mm.generators()[j].vector, mono);
}

}  // namespace

TEST_SUITE("hirsch_brown") {

TEST_CASE("poly-rot-2: trivial transferred differential and the standard extension") {
  const TruncatedModule m = module_of("poly-rot-2");
  const MinimalModel mm = minimal_model(m);
  CHECK(mm.dhb_is_zero());
  const RatVector omega = basis_vector(m.complex(), "omega");
  CHECK(canonical_extension(m, mm, omega) == term(m, "omega") + term(m, "mu", {1}));
  for (const auto& g : mm.generators()) CHECK(m.d_G(canonical_extension(m, mm, g.vector)).is_zero());
  // free on generators of degree 0, 2, 2: dims 1, 0, 3, 0, 3, ...
  const auto dims = cohomology_minimal(m, mm).dims;
  for (int k = 0; k <= 10; ++k) CHECK(dims[k] == (k == 0 ? 1u : k % 2 ? 0u : 3u));
}

TEST_CASE("poly-rot-2: further hand values") {
  const TruncatedModule m = module_of("poly-rot-2");
  const MinimalModel mm = minimal_model(m);
  const RatVector mu_omega = basis_vector(m.complex(), "mu_omega");
  CHECK(canonical_extension(m, mm, mu_omega) == term(m, "mu_omega") + term(m, "mu2", {1}, Rational(1, 2)));
  // the perturbed split at x = mu: both sides are d mu
  const ModuleElement mu = term(m, "mu");
  CHECK(m.phi(m.d_G(m.phi_inverse(mu))) == term(m, "dmu"));
  CHECK(m.harmonic(m.d_G(m.phi_inverse(mu))) + m.d(mu) == term(m, "dmu"));
  CHECK(check_perturbed_split(m, mu).passed);
  // the unit
  for (const auto& g : mm.generators())
    CHECK(twisted_product(m, mm, basis_vector(m.complex(), "1"), g.vector).value == m.embed(g.vector));
}

TEST_CASE("trivial action: extensions are the classes themselves and gamma exists") {
  const TruncatedModule m = module_of("trivial-action");
  const MinimalModel mm = minimal_model(m);
  for (const auto& a : mm.generators()) {
    CHECK(canonical_extension(m, mm, a.vector) == m.embed(a.vector));
    for (const auto& b : mm.generators()) {
      const ModuleElement gamma = gamma_witness(m, mm, a.vector, b.vector);
      const ModuleElement lhs = m.phi_inverse(twisted_product(m, mm, a.vector, b.vector).value);
      CHECK(lhs == m.product(m.embed(a.vector), m.embed(b.vector)) + m.d_G(gamma));
    }
  }
}

TEST_CASE("identity failures become IdentityFailed") {
  IdentityReport rep;
  rep.checks.push_back({"a = b", true, 3, ""});
  CHECK_NOTHROW(require_passed(rep));
  rep.checks.push_back({"c = d", false, 1, "omega"});
  CHECK_ERROR_KIND(require_passed(rep), ErrorKind::IdentityFailed);
  const TruncatedModule m = module_of("sphere-rotation");
  CHECK_NOTHROW(require_passed(homotopy_identities(m, minimal_model(m))));
}

TEST_CASE("poly-rot-2: twisted product and its witness") {
  const TruncatedModule m = module_of("poly-rot-2");
  const MinimalModel mm = minimal_model(m);
  const RatVector omega = basis_vector(m.complex(), "omega");
  const TwistedProduct tp = twisted_product(m, mm, omega, omega);
  CHECK(tp.value == term(m, "mu_omega", {1}, 2));
  CHECK(is_zero(tp.form_product_harmonic));
  CHECK(tp.weight_zero_matches);
  const ModuleElement gamma = gamma_witness(m, mm, omega, omega);
  const ModuleElement ext = canonical_extension(m, mm, omega);
  CHECK(m.phi_inverse(tp.value) == m.product(ext, ext) + m.d_G(gamma));
}

TEST_CASE("sphere-rotation: the extension carries the harmonic shift") {
  const TruncatedModule m = module_of("sphere-rotation");
  const MinimalModel mm = minimal_model(m);
  const RatVector omega = basis_vector(m.complex(), "omega");
  CHECK(canonical_extension(m, mm, omega) == term(m, "omega") + term(m, "mu", {1}) + term(m, "1", {1}, Rational(-1, 2)));
  const TwistedProduct tp = twisted_product(m, mm, omega, omega);
  CHECK(tp.value == term(m, "omega", {1}, -1) + term(m, "1", {2}, Rational(-1, 4)));
  CHECK(tp.weight_zero_matches);
}

TEST_CASE("free-rotation, two-torus and su2 transferred differentials") {
  {
    const TruncatedModule m = module_of("free-rotation");
    const MinimalModel mm = minimal_model(m);
    CHECK(mm.image(*mm.find("dtheta")) == term(m, "1", {1}, -1));
    CHECK_FALSE(mm.dhb_is_zero());
    CHECK(cohomology_minimal(m, mm).dims == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_ERROR_KIND(canonical_extension(m, mm, basis_vector(m.complex(), "dtheta")), ErrorKind::NotCEF);
    CHECK_ERROR_KIND(twisted_product(m, mm, basis_vector(m.complex(), "1"), basis_vector(m.complex(), "1")),
                     ErrorKind::NotCEF);
  }
  {
    const TruncatedModule m = module_of("two-torus-rotation");
    const MinimalModel mm = minimal_model(m);
    CHECK(mm.image(*mm.find("dtheta1")) == term(m, "1", {1}, -1));
    CHECK(mm.image(*mm.find("dtheta2")).is_zero());
    CHECK(mm.image(*mm.find("dtheta1_dtheta2")) == term(m, "dtheta2", {1}, -1));
    // the orbit space is a circle
    CHECK(cohomology_minimal(m, mm).dims == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  }
  {
    const TruncatedModule m = module_of("su2-free");
    const MinimalModel mm = minimal_model(m);
    CHECK(m.datum().max_t_degree() == 4);
    CHECK(mm.image(*mm.find("x3")) == term(m, "1", {1}, -1));
    CHECK(cohomology_minimal(m, mm).dims == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_ERROR_KIND(twisted_product(m, mm, basis_vector(m.complex(), "1"), basis_vector(m.complex(), "1")),
                     ErrorKind::NotAbelian);
  }
}

TEST_CASE("trivial action: twisted product is the harmonic part of the form product") {
  const TruncatedModule m = module_of("trivial-action");
  const MinimalModel mm = minimal_model(m);
  for (const auto& a : mm.generators())
    for (const auto& b : mm.generators()) {
      CAPTURE(a.label);
      CAPTURE(b.label);
      const TwistedProduct tp = twisted_product(m, mm, a.vector, b.vector);
      CHECK(tp.value == m.embed(m.hodge().harmonic_total() * m.datum().product()->multiply(a.vector, b.vector)));
    }
}

TEST_CASE("product errors") {
  const TruncatedModule m = module_of(direct_sum(fixture("poly-rot-2"), fixture("sphere-rotation")), 6);
  const MinimalModel mm = minimal_model(m);
  CHECK_ERROR_KIND(twisted_product(m, mm, mm.generators()[0].vector, mm.generators()[0].vector),
                   ErrorKind::ProductUnavailable);
  const TruncatedModule p = module_of("poly-rot-2");
  const MinimalModel pm = minimal_model(p);
  CHECK_ERROR_KIND(twisted_product(p, pm, basis_vector(p.complex(), "mu"), basis_vector(p.complex(), "omega")),
                   ErrorKind::InvalidArgument);
}

TEST_CASE("twisted product: commutativity, associativity, Cartan comparison") {
  std::vector<std::pair<std::string, EquivariantDatum>> data;
  for (const auto& [name, d] : all_data()) {
    if (!d.product() || !d.abelian()) continue;
    const TruncatedModule m = module_of(d, 6);
    if (!minimal_model(m).dhb_is_zero()) continue;
    data.emplace_back(name, d);
  }
  CHECK(data.size() >= 4);
  for (const auto& [name, d] : data) {
    CAPTURE(name);
    const TruncatedModule m = module_of(d, 8);
    const MinimalModel mm = minimal_model(m);
    const std::size_t n = mm.generators().size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const ModuleElement a = harmonic_element(m, mm, i), b = harmonic_element(m, mm, j);
        const int sign = (mm.generators()[i].degree * mm.generators()[j].degree) % 2 ? -1 : 1;
        const ModuleElement ab = twisted_product(m, mm, a, b);
        CHECK(ab == Rational(sign) * twisted_product(m, mm, b, a));
        // the Cartan-model oracle: lifts differ by a d_G boundary
        const ModuleElement diff = m.phi_inverse(ab) - m.product(m.phi_inverse(a), m.phi_inverse(b));
        if (!diff.is_zero()) {
          const auto y = solve_dG(m, diff, mm.generators()[i].degree + mm.generators()[j].degree);
          REQUIRE(y);
          CHECK(m.d_G(*y) == diff);
        }
        CHECK(m.d_G(gamma_witness(m, mm, mm.generators()[i].vector, mm.generators()[j].vector)) == diff);
        for (std::size_t k = 0; k < n; ++k) {
          if (mm.generators()[i].degree + mm.generators()[j].degree + mm.generators()[k].degree > 4) continue;
          const ModuleElement c = harmonic_element(m, mm, k);
          CHECK(twisted_product(m, mm, ab, c) == twisted_product(m, mm, a, twisted_product(m, mm, b, c)));
        }
      }
  }
}

TEST_CASE("both cohomology routes agree and d_HB is R_G-linear") {
  for (const auto& [name, d] : all_data()) {
    CAPTURE(name);
    const TruncatedModule m = module_of(d, 6);
    const MinimalModel mm = minimal_model(m);
    CHECK(cohomology_minimal(m, mm).dims == cohomology_cartan(m).dims);
    for (std::size_t j = 0; j < mm.generators().size(); ++j)
      for (std::size_t a = 1; a < m.monomials().size(); ++a) {
        if (m.monomials()[a].weight > m.operator_window()) continue;
        CHECK(mm.apply(m, harmonic_element(m, mm, j, a)) == m.multiply_monomial(a, mm.image(j)));
      }
  }
}

TEST_CASE("operator identities on every fixture and variant at a small cap") {
  for (const auto& [name, d] : all_data()) {
    CAPTURE(name);
    const TruncatedModule m = module_of(d, 2 * d.max_t_degree() + 2);
    const IdentityReport rep = operator_identities(m, minimal_model(m), 10, 7);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, (c.name + ": " + c.witness));
  }
}

TEST_CASE("random elements stay in the operator window") {
  const TruncatedModule m = module_of("two-torus-rotation");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ModuleElement x = random_element(m, seed);
    for (const auto& [key, v] : x.terms()) CHECK(m.monomials()[key.first].weight <= m.operator_window());
    CHECK(check_perturbed_split(m, x).passed);
  }
}

}
