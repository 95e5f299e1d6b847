#include "hbm/fixtures.hpp"

#include "hbm/datum_io.hpp"
#include "hbm/error.hpp"

#include <map>
#include <random>

namespace hbm {

namespace {

struct Fixture {
  std::string_view description;
  std::string_view text;
};

// Truncated polynomial model in one moment coordinate mu with a rotation
// contracting omega onto dmu.
constexpr std::string_view kPolyRot2 = R"(degrees:
  - {degree: 0, labels: ["1", mu, mu2]}
  - {degree: 1, labels: [dmu, mu_dmu]}
  - {degree: 2, labels: [omega, mu_omega]}
differential:
  - {from_label: mu, to_label: dmu, coeff: "1"}
  - {from_label: mu2, to_label: mu_dmu, coeff: "2"}
contractions:
  - t_degree: 2
    entries:
      - {from_label: omega, to_label: dmu, coeff: "1"}
      - {from_label: mu_omega, to_label: mu_dmu, coeff: "1"}
product:
  - {left_label: mu, right_label: mu, out_label: mu2, coeff: "1"}
  - {left_label: mu, right_label: dmu, out_label: mu_dmu, coeff: "1"}
  - {left_label: mu, right_label: omega, out_label: mu_omega, coeff: "1"}
cap: 10
)";

constexpr std::string_view kFreeRotation = R"(degrees:
  - {degree: 0, labels: ["1"]}
  - {degree: 1, labels: [dtheta]}
differential: []
contractions:
  - t_degree: 2
    entries:
      - {from_label: dtheta, to_label: "1", coeff: "1"}
product: []
cap: 10
)";

constexpr std::string_view kTwoTorusRotation = R"(degrees:
  - {degree: 0, labels: ["1"]}
  - {degree: 1, labels: [dtheta1, dtheta2]}
  - {degree: 2, labels: [dtheta1_dtheta2]}
differential: []
contractions:
  - t_degree: 2
    entries:
      - {from_label: dtheta1, to_label: "1", coeff: "1"}
      - {from_label: dtheta1_dtheta2, to_label: dtheta2, coeff: "1"}
product:
  - {left_label: dtheta1, right_label: dtheta2, out_label: dtheta1_dtheta2, coeff: "1"}
cap: 10
)";

// Small-model shape for SU(2) acting freely on S^3: one generator of degree 4.
constexpr std::string_view kSu2Free = R"(degrees:
  - {degree: 0, labels: ["1"]}
  - {degree: 1, labels: []}
  - {degree: 2, labels: []}
  - {degree: 3, labels: [x3]}
differential: []
contractions:
  - t_degree: 4
    entries:
      - {from_label: x3, to_label: "1", coeff: "1"}
cap: 10
)";

constexpr std::string_view kTrivialAction = R"(degrees:
  - {degree: 0, labels: ["1", mu, mu2]}
  - {degree: 1, labels: [dmu, mu_dmu]}
  - {degree: 2, labels: [omega, mu_omega]}
differential:
  - {from_label: mu, to_label: dmu, coeff: "1"}
  - {from_label: mu2, to_label: mu_dmu, coeff: "2"}
contractions:
  - t_degree: 2
    entries: []
product:
  - {left_label: mu, right_label: mu, out_label: mu2, coeff: "1"}
  - {left_label: mu, right_label: dmu, out_label: mu_dmu, coeff: "1"}
  - {left_label: mu, right_label: omega, out_label: mu_omega, coeff: "1"}
cap: 10
)";

// Two-dimensional model with a non-diagonal inner product on degree 0, so the
// harmonic part of mu is its weighted average 1/2.
constexpr std::string_view kSphereRotation = R"(degrees:
  - {degree: 0, labels: ["1", mu]}
  - {degree: 1, labels: [dmu]}
  - {degree: 2, labels: [omega]}
differential:
  - {from_label: mu, to_label: dmu, coeff: "1"}
inner:
  - {degree: 0, row_label: "1", col_label: "1", coeff: "2"}
  - {degree: 0, row_label: "1", col_label: mu, coeff: "1"}
  - {degree: 0, row_label: mu, col_label: mu, coeff: "3"}
contractions:
  - t_degree: 2
    entries:
      - {from_label: omega, to_label: dmu, coeff: "1"}
product: []
cap: 10
)";

// poly-rot-2 with i(dmu) = mu injected: breaks d i + i d = 0.
constexpr std::string_view kBrokenCartan = R"(degrees:
  - {degree: 0, labels: ["1", mu, mu2]}
  - {degree: 1, labels: [dmu, mu_dmu]}
  - {degree: 2, labels: [omega, mu_omega]}
differential:
  - {from_label: mu, to_label: dmu, coeff: "1"}
  - {from_label: mu2, to_label: mu_dmu, coeff: "2"}
contractions:
  - t_degree: 2
    entries:
      - {from_label: omega, to_label: dmu, coeff: "1"}
      - {from_label: mu_omega, to_label: mu_dmu, coeff: "1"}
      - {from_label: dmu, to_label: mu, coeff: "1"}
cap: 10
)";

const std::map<std::string, Fixture, std::less<>>& registry() {
  static const std::map<std::string, Fixture, std::less<>> r = {
      {"poly-rot-2", {"truncated moment-coordinate model of a circle rotation", kPolyRot2}},
      {"free-rotation", {"circle acting freely on itself", kFreeRotation}},
      {"two-torus-rotation", {"circle rotating the first factor of a 2-torus", kTwoTorusRotation}},
      {"su2-free", {"rank-one non-abelian small model, generator of degree 4", kSu2Free}},
      {"trivial-action", {"poly-rot-2 forms with zero contraction", kTrivialAction}},
      {"sphere-rotation", {"rotation model with a non-identity inner product", kSphereRotation}},
      {"broken-cartan", {"negative control: injected i(dmu) = mu", kBrokenCartan}},
  };
  return r;
}

RatMatrix degree_block_diag(const GradedComplex& layout, const std::vector<RatMatrix>& blocks) {
  const std::size_t n = layout.total_dim();
  RatMatrix out(n, n);
  for (int m = 0; m <= layout.top_degree(); ++m) {
    const std::size_t off = layout.offset(m);
    blocks[static_cast<std::size_t>(m)].for_each(
        [&](std::size_t r, std::size_t c, const Rational& v) { out.set(off + r, off + c, v); });
  }
  return out;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"poly-rot-2",     "free-rotation",  "two-torus-rotation",
                                                 "su2-free",       "trivial-action", "sphere-rotation"};
  return names;
}

const std::vector<std::string>& negative_fixture_names() {
  static const std::vector<std::string> names = {"broken-cartan"};
  return names;
}

std::string_view fixture_text(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
  return it->second.text;
}

std::string fixture_description(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
  return std::string(it->second.description);
}

EquivariantDatum fixture(std::string_view name) { return parse_datum_unchecked(fixture_text(name), name); }

EquivariantDatum direct_sum(const EquivariantDatum& a, const EquivariantDatum& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::InvalidArgument, "direct sum needs matching generators");
  for (std::size_t j = 0; j < a.rank(); ++j)
    if (a.contractions()[j].t_degree != b.contractions()[j].t_degree)
      throw Error(ErrorKind::InvalidArgument, "direct sum needs matching generator degrees");

  const GradedComplex& ca = a.complex();
  const GradedComplex& cb = b.complex();
  const int top = std::max(ca.top_degree(), cb.top_degree());
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
  // new index of old basis elements
  std::vector<std::size_t> ia(ca.total_dim()), ib(cb.total_dim());
  std::size_t next = 0;
  for (int m = 0; m <= top; ++m) {
    for (std::size_t i = 0; i < ca.dim(m); ++i) {
      labels[static_cast<std::size_t>(m)].push_back(ca.label(ca.offset(m) + i) + "@1");
      ia[ca.offset(m) + i] = next++;
    }
    for (std::size_t i = 0; i < cb.dim(m); ++i) {
      labels[static_cast<std::size_t>(m)].push_back(cb.label(cb.offset(m) + i) + "@2");
      ib[cb.offset(m) + i] = next++;
    }
  }
  auto sum = [&](const RatMatrix& x, const RatMatrix& y) {
    RatMatrix out(next, next);
    x.for_each([&](std::size_t r, std::size_t c, const Rational& v) { out.set(ia[r], ia[c], v); });
    y.for_each([&](std::size_t r, std::size_t c, const Rational& v) { out.set(ib[r], ib[c], v); });
    return out;
  };
  GradedComplex complex(labels, sum(ca.d_total(), cb.d_total()), sum(ca.inner_total(), cb.inner_total()));
  std::vector<Contraction> cons;
  for (std::size_t j = 0; j < a.rank(); ++j)
    cons.push_back({a.contractions()[j].t_degree, sum(a.contractions()[j].op, b.contractions()[j].op)});
  return EquivariantDatum(std::move(complex), std::move(cons), std::nullopt, std::max(a.cap(), b.cap()));
}

EquivariantDatum tensor(const EquivariantDatum& a, const EquivariantDatum& b) {
  const GradedComplex& ca = a.complex();
  const GradedComplex& cb = b.complex();
  const int top = ca.top_degree() + cb.top_degree();
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(std::max(top + 1, 0)));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (int m = 0; m <= top; ++m)
    for (std::size_t i = 0; i < ca.total_dim(); ++i)
      for (std::size_t j = 0; j < cb.total_dim(); ++j) {
        if (ca.degree_of(i) + cb.degree_of(j) != m) continue;
        labels[static_cast<std::size_t>(m)].push_back(ca.label(i) + "." + cb.label(j));
        index.emplace(std::pair{i, j}, index.size());
      }
  const std::size_t n = index.size();
  auto sign_a = [&](std::size_t i) { return ca.degree_of(i) % 2 ? Rational(-1) : Rational(1); };

  // x (x) 1 and sigma (x) y, sigma the parity of the left factor
  auto left = [&](const RatMatrix& x) {
    RatMatrix out(n, n);
    x.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
      for (std::size_t j = 0; j < cb.total_dim(); ++j) out.set(index.at({r, j}), index.at({c, j}), v);
    });
    return out;
  };
  auto right = [&](const RatMatrix& y, bool signed_) {
    RatMatrix out(n, n);
    y.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
      for (std::size_t i = 0; i < ca.total_dim(); ++i)
        out.set(index.at({i, r}), index.at({i, c}), signed_ ? sign_a(i) * v : v);
    });
    return out;
  };
  RatMatrix inner(n, n);
  ca.inner_total().for_each([&](std::size_t r, std::size_t c, const Rational& v) {
    cb.inner_total().for_each([&](std::size_t r2, std::size_t c2, const Rational& w) {
      inner.set(index.at({r, r2}), index.at({c, c2}), v * w);
    });
  });
  GradedComplex complex(labels, left(ca.d_total()) + right(cb.d_total(), true), inner);

  std::vector<Contraction> cons;
  for (const auto& con : a.contractions()) cons.push_back({con.t_degree, left(con.op)});
  for (const auto& con : b.contractions()) cons.push_back({con.t_degree, right(con.op, true)});

  std::optional<ProductTable> product;
  if (a.product() && b.product()) {
    std::vector<ProductEntry> entries;
    for (const auto& [p, x] : index)
      for (const auto& [q, y] : index) {
        // (a1 . b1)(a2 . b2) = (-1)^{|b1||a2|} a1 a2 . b1 b2
        const RatVector prod_a = a.product()->multiply(unit_vector(ca.total_dim(), p.first), unit_vector(ca.total_dim(), q.first));
        const RatVector prod_b = b.product()->multiply(unit_vector(cb.total_dim(), p.second), unit_vector(cb.total_dim(), q.second));
        const Rational s = (cb.degree_of(p.second) * ca.degree_of(q.first)) % 2 ? -1 : 1;
        for (std::size_t i = 0; i < prod_a.size(); ++i) {
          if (prod_a[i] == 0) continue;
          for (std::size_t j = 0; j < prod_b.size(); ++j)
            if (prod_b[j] != 0) entries.push_back({x, y, index.at({i, j}), s * prod_a[i] * prod_b[j]});
        }
      }
    product.emplace(complex, std::move(entries));
  }
  return EquivariantDatum(std::move(complex), std::move(cons), std::move(product), std::max(a.cap(), b.cap()));
}

EquivariantDatum conjugate(const EquivariantDatum& a, std::uint64_t seed) {
  const GradedComplex& c = a.complex();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1, 2);
  std::vector<RatMatrix> blocks, inv_blocks;
  for (int m = 0; m <= c.top_degree(); ++m) {
    const std::size_t n = c.dim(m);
    RatMatrix lower = RatMatrix::identity(n), upper = RatMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < r; ++col) {
        // column 0 of degree 0 stays e_0 so a product's unit survives
        if (!(m == 0 && col == 0)) lower.set(r, col, coeff(rng));
        upper.set(col, r, coeff(rng));
      }
    const RatMatrix t = lower * upper;
    blocks.push_back(t);
    inv_blocks.push_back(inverse(t));
  }
  const RatMatrix t = degree_block_diag(c, blocks);
  const RatMatrix tinv = degree_block_diag(c, inv_blocks);

  std::vector<std::vector<std::string>> labels = c.labels();
  for (auto& deg : labels)
    for (auto& l : deg) l += "'";
  GradedComplex complex(labels, tinv * c.d_total() * t, t.transpose() * c.inner_total() * t);

  std::vector<Contraction> cons;
  for (const auto& con : a.contractions()) cons.push_back({con.t_degree, tinv * con.op * t});

  std::optional<ProductTable> product;
  if (const ProductTable* p = a.product()) {
    const std::size_t n = c.total_dim();
    std::vector<ProductEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const RatVector v = tinv * p->multiply(t.column(i), t.column(j));
        for (std::size_t k = 0; k < n; ++k)
          if (v[k] != 0) entries.push_back({i, j, k, v[k]});
      }
    product.emplace(complex, std::move(entries));
  }
  return EquivariantDatum(std::move(complex), std::move(cons), std::move(product), a.cap());
}

std::vector<std::pair<std::string, EquivariantDatum>> fixture_variants() {
  std::vector<std::pair<std::string, EquivariantDatum>> out;
  for (const auto& name : fixture_names())
    for (std::uint64_t seed : {1u, 2u})
      out.emplace_back("conj(" + name + "," + std::to_string(seed) + ")", conjugate(fixture(name), seed));

  auto f = [](std::string_view n) { return fixture(n); };
  out.emplace_back("sum(poly-rot-2,sphere-rotation)", direct_sum(f("poly-rot-2"), f("sphere-rotation")));
  out.emplace_back("sum(free-rotation,two-torus-rotation)", direct_sum(f("free-rotation"), f("two-torus-rotation")));
  out.emplace_back("sum(trivial-action,free-rotation)", direct_sum(f("trivial-action"), f("free-rotation")));
  out.emplace_back("tensor(free-rotation,free-rotation)", tensor(f("free-rotation"), f("free-rotation")));
  out.emplace_back("tensor(sphere-rotation,free-rotation)", tensor(f("sphere-rotation"), f("free-rotation")));
  out.emplace_back("tensor(poly-rot-2,free-rotation)", tensor(f("poly-rot-2"), f("free-rotation")));
  out.emplace_back("tensor(su2-free,free-rotation)", tensor(f("su2-free"), f("free-rotation")));
  out.emplace_back("tensor(two-torus-rotation,sphere-rotation)", tensor(f("two-torus-rotation"), f("sphere-rotation")));
  out.emplace_back("conj(tensor(sphere-rotation,free-rotation),7)",
                   conjugate(tensor(f("sphere-rotation"), f("free-rotation")), 7));
  out.emplace_back("conj(sum(poly-rot-2,sphere-rotation),8)",
                   conjugate(direct_sum(f("poly-rot-2"), f("sphere-rotation")), 8));
  return out;
}

}  // namespace hbm
