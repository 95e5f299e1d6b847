#include "hbm/hirsch_brown.hpp"

#include "hbm/error.hpp"

#include <random>

namespace hbm {

ModuleElement dbar(const TruncatedModule& module, const ModuleElement& x) {
  return module.psi_inverse(module.d_G(module.psi(x)));
}

ModuleElement d_hb(const TruncatedModule& module, const RatVector& harmonic) {
  const ModuleElement h = module.embed(harmonic);
  const ModuleElement projected = module.harmonic(dbar(module, h));
  const ModuleElement conjugated = module.phi(module.d_G(module.phi_inverse(h)));
  if (projected != conjugated)
    throw Error(ErrorKind::TheoremMismatch, "(I(x)H) dbar(h) = " + module.format(projected) +
                                                " but phi d_G phi^-1(h) = " + module.format(conjugated));
  return projected;
}

MinimalModel minimal_model(const TruncatedModule& module) {
  const ValidationReport rep = validate(module.datum(), module.cap());
  MinimalModel mm;
  mm.cap_ = module.cap();
  mm.product_ok_ = rep.product_ok;
  mm.generators_ = module.hodge().generators();
  for (const auto& g : mm.generators_) {
    mm.images_.push_back(d_hb(module, g.vector));
    mm.dhb_is_zero_ = mm.dhb_is_zero_ && mm.images_.back().is_zero();
  }
  return mm;
}

std::optional<std::size_t> MinimalModel::find(std::string_view label) const {
  for (std::size_t j = 0; j < generators_.size(); ++j)
    if (generators_[j].label == label) return j;
  return std::nullopt;
}

std::map<std::pair<std::size_t, std::size_t>, Rational> harmonic_coordinates(const TruncatedModule& module,
                                                                               const ModuleElement& x) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  std::map<std::size_t, RatVector> parts;
  for (const auto& [key, value] : x.terms()) {
    auto [it, fresh] = parts.try_emplace(key.first, zero_vector(module.complex().total_dim()));
    it->second[key.second] = value;
  }
  for (const auto& [mono, v] : parts) {
    const RatVector c = module.hodge().harmonic_coordinates(v);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) out[{mono, j}] = c[j];
  }
  return out;
}

ModuleElement MinimalModel::apply(const TruncatedModule& module, const ModuleElement& x) const {
  ModuleElement y;
  for (const auto& [key, value] : harmonic_coordinates(module, x))
    y += value * module.multiply_monomial(key.first, images_.at(key.second));
  return y;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> generator_basis(const TruncatedModule& module, const MinimalModel& mm,
                                                                 int m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < module.monomials().size(); ++a)
    for (std::size_t j = 0; j < mm.generators().size(); ++j)
      if (module.monomials()[a].weight + mm.generators()[j].degree == m) out.emplace_back(a, j);
  return out;
}

}  // namespace

CohomologyTable cohomology_minimal(const TruncatedModule& module, const MinimalModel& mm) {
  CohomologyTable table;
  table.window = module.cap();
  std::vector<std::size_t> ranks;
  for (int m = 0; m <= module.cap(); ++m) {
    const auto src = generator_basis(module, mm, m);
    const auto dst = generator_basis(module, mm, m + 1);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
    RatMatrix dm(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const ModuleElement image = module.multiply_monomial(src[c].first, mm.image(src[c].second));
      for (const auto& [key, value] : harmonic_coordinates(module, image)) dm.set(row_of.at(key), c, value);
    }
    const std::size_t r = rank(dm);
    table.dims.push_back(src.size() - r - (m > 0 ? ranks.back() : 0));
    ranks.push_back(r);
  }
  return table;
}

CohomologyTable cohomology_cartan(const TruncatedModule& module) {
  CohomologyTable table;
  table.window = module.cap();
  std::size_t prev = 0;
  for (int m = 0; m <= module.cap(); ++m) {
    const RatMatrix dm = module.degree_matrix(m, 1, [&](const ModuleElement& x) { return module.d_G(x); });
    const std::size_t r = rank(dm);
    table.dims.push_back(dm.cols() - r - prev);
    prev = r;
  }
  return table;
}

namespace {

template <class Pred>
CheckResult check_all(const std::string& name, const TruncatedModule& module, const std::vector<ModuleElement>& xs,
                      Pred&& ok) {
  CheckResult r{name, true, 0, {}};
  for (const auto& x : xs) {
    ++r.checked;
    bool good = false;
    try {
      good = ok(x);
    } catch (const Error& e) {
      r.witness = module.format(x) + " (" + e.what() + ")";
    }
    if (!good) {
      r.passed = false;
      if (r.witness.empty()) r.witness = module.format(x);
      break;
    }
  }
  return r;
}

std::vector<ModuleElement> basis_elements(const TruncatedModule& module, int max_weight) {
  std::vector<ModuleElement> out;
  for (const auto& key : module.basis_up_to_weight(max_weight)) out.push_back(module.basis_element(key));
  return out;
}

/// t^a (x) v for every v in `vectors` (total-space) and weight(a) <= max_weight.
std::vector<ModuleElement> spread(const TruncatedModule& module, const std::vector<RatVector>& vectors, int max_weight) {
  std::vector<ModuleElement> out;
  for (std::size_t a = 0; a < module.monomials().size(); ++a) {
    if (module.monomials()[a].weight > max_weight) continue;
    for (const auto& v : vectors) out.push_back(module.embed(v, a));
  }
  return out;
}

std::vector<RatVector> summand(const TruncatedModule& module, const std::vector<RatVector>& (HodgeData::*basis)(int) const) {
  std::vector<RatVector> out;
  const GradedComplex& c = module.complex();
  for (int m = 0; m <= c.top_degree(); ++m)
    for (const auto& v : (module.hodge().*basis)(m)) out.push_back(c.embed(m, v));
  return out;
}

std::vector<RatVector> harmonic_vectors(const TruncatedModule& module) {
  std::vector<RatVector> out;
  for (const auto& g : module.hodge().generators()) out.push_back(g.vector);
  return out;
}

}  // namespace

void require_passed(const IdentityReport& report) {
  for (const auto& c : report.checks)
    if (!c.passed) throw Error(ErrorKind::IdentityFailed, c.name + " fails at " + c.witness);
}

IdentityReport homotopy_identities(const TruncatedModule& module, const MinimalModel& mm) {
  IdentityReport rep;
  rep.window = module.operator_window();
  const auto harmonics = spread(module, harmonic_vectors(module), rep.window);
  const auto all = basis_elements(module, rep.window);
  const TruncatedModule& M = module;

  rep.checks.push_back(check_all("(I(x)H) psi^-1 phi^-1 i_H = I", M, harmonics, [&](const ModuleElement& x) {
    return M.harmonic(M.psi_inverse(M.phi_inverse(x))) == x;
  }));
  rep.checks.push_back(check_all("(I(x)H) psi^-1 d_G = d_HB (I(x)H) psi^-1", M, all, [&](const ModuleElement& x) {
    return M.harmonic(M.psi_inverse(M.d_G(x))) == mm.apply(M, M.harmonic(M.psi_inverse(x)));
  }));
  rep.checks.push_back(check_all("d_G phi^-1 i_H = phi^-1 i_H d_HB", M, harmonics, [&](const ModuleElement& x) {
    return M.d_G(M.phi_inverse(x)) == M.phi_inverse(mm.apply(M, x));
  }));
  return rep;
}

IdentityReport dbar_trichotomy(const TruncatedModule& module) {
  IdentityReport rep;
  rep.window = module.operator_window();
  const TruncatedModule& M = module;
  const auto boundaries = spread(M, summand(M, &HodgeData::boundary_basis), rep.window);
  const auto coexact = spread(M, summand(M, &HodgeData::coexact_basis), rep.window);
  const auto harmonics = spread(M, harmonic_vectors(M), rep.window);
  rep.checks.push_back(check_all("dbar = 0 on R_G(x)B", M, boundaries,
                                 [&](const ModuleElement& x) { return dbar(M, x).is_zero(); }));
  rep.checks.push_back(check_all("dbar = d on R_G(x)E", M, coexact,
                                 [&](const ModuleElement& x) { return dbar(M, x) == M.d(x); }));
  rep.checks.push_back(check_all("dbar = -psi^-1 partial = -partial phi^-1 on R_G(x)H", M, harmonics,
                                 [&](const ModuleElement& x) {
                                   const ModuleElement v = dbar(M, x);
                                   return v == -M.psi_inverse(M.partial(x)) && v == -M.partial(M.phi_inverse(x));
                                 }));
  return rep;
}

CheckResult coexact_square(const TruncatedModule& module) {
  const auto coexact = spread(module, summand(module, &HodgeData::coexact_basis), module.operator_window());
  return check_all("psi d = d_G on R_G(x)E", module, coexact,
                   [&](const ModuleElement& x) { return module.psi(module.d(x)) == module.d_G(x); });
}

CheckResult check_perturbed_split(const TruncatedModule& module, const ModuleElement& x) {
  const TruncatedModule& M = module;
  return check_all("phi d_G phi^-1 = (I(x)H) d_G phi^-1 + d", M, {x}, [&](const ModuleElement& y) {
    const ModuleElement lifted = M.phi_inverse(y);
    return M.phi(M.d_G(lifted)) == M.harmonic(M.d_G(lifted)) + M.d(y);
  });
}

ModuleElement random_element(const TruncatedModule& module, std::uint64_t seed, std::size_t terms) {
  const auto basis = module.basis_up_to_weight(module.operator_window());
  ModuleElement x;
  if (basis.empty()) return x;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (std::size_t i = 0; i < terms; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    x.add(basis[pick(rng)], c);
  }
  return x;
}

IdentityReport operator_identities(const TruncatedModule& module, const MinimalModel& mm, std::size_t random_samples,
                                   std::uint64_t seed) {
  IdentityReport rep;
  rep.window = module.operator_window();
  const TruncatedModule& M = module;
  const auto window_basis = basis_elements(M, rep.window);
  const auto harmonics = spread(M, harmonic_vectors(M), rep.window);

  rep.checks.push_back(check_all("d_G^2 = 0", M, basis_elements(M, M.cap()),
                                 [&](const ModuleElement& x) { return M.d_G(M.d_G(x)).is_zero(); }));
  rep.checks.push_back(check_PQ_zero(M));
  rep.checks.push_back(check_all("Q partial = partial P", M, window_basis,
                                 [&](const ModuleElement& x) { return M.Q(M.partial(x)) == M.partial(M.P(x)); }));
  rep.checks.push_back(check_all("phi phi^-1 = I and psi psi^-1 = I", M, window_basis, [&](const ModuleElement& x) {
    return M.phi(M.phi_inverse(x)) == x && M.psi(M.psi_inverse(x)) == x;
  }));
  rep.checks.push_back(check_all("psi^-1 phi^-1 = sum (P+Q)^n", M, window_basis, [&](const ModuleElement& x) {
    ModuleElement sum = x, term = x;
    for (int i = 0; i <= M.cap() + 1 && !term.is_zero(); ++i) {
      term = M.P(term) + M.Q(term);
      sum += term;
    }
    return term.is_zero() && M.psi_inverse(M.phi_inverse(x)) == sum;
  }));
  rep.checks.push_back(coexact_square(M));
  for (auto& c : dbar_trichotomy(M).checks) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_all("psi^-1 d_G = dbar psi^-1", M, window_basis, [&](const ModuleElement& x) {
    return M.psi_inverse(M.d_G(x)) == dbar(M, M.psi_inverse(x));
  }));
  rep.checks.push_back(check_all("(I(x)H) dbar = phi d_G phi^-1 on generators", M, spread(M, harmonic_vectors(M), 0),
                                 [&](const ModuleElement& x) {
                                   d_hb(M, M.form_part(x, 0));
                                   return true;
                                 }));
  rep.checks.push_back(check_all("d_HB^2 = 0", M, harmonics,
                                 [&](const ModuleElement& x) { return mm.apply(M, mm.apply(M, x)).is_zero(); }));
  for (auto& c : homotopy_identities(M, mm).checks) rep.checks.push_back(std::move(c));

  CheckResult split{"phi d_G phi^-1 = (I(x)H) d_G phi^-1 + d (random)", true, 0, {}};
  for (std::size_t i = 0; i < random_samples && split.passed; ++i) {
    const CheckResult r = check_perturbed_split(M, random_element(M, seed + i));
    ++split.checked;
    if (!r.passed) {
      split.passed = false;
      split.witness = r.witness;
    }
  }
  rep.checks.push_back(std::move(split));
  return rep;
}

ModuleElement canonical_extension(const TruncatedModule& module, const MinimalModel& mm, const RatVector& harmonic) {
  if (!mm.dhb_is_zero())
    throw Error(ErrorKind::NotCEF, "d_HB is nonzero up to degree " + std::to_string(module.cap()));
  const ModuleElement h = module.embed(harmonic);
  const ModuleElement ext = module.phi_inverse(h);
  if (!module.d_G(ext).is_zero())
    throw Error(ErrorKind::IdentityFailed, "d_G phi^-1(h) = " + module.format(module.d_G(ext)));
  if (module.weight_zero_part(ext) != harmonic)
    throw Error(ErrorKind::IdentityFailed, "weight-0 part of the extension differs from h");
  return ext;
}

namespace {

void require_product(const TruncatedModule& module, const MinimalModel& mm) {
  if (!module.datum().abelian()) throw Error(ErrorKind::NotAbelian, "twisted products need a torus action");
  if (!module.datum().product()) throw Error(ErrorKind::ProductUnavailable, "the datum carries no product");
  if (!mm.product_ok()) throw Error(ErrorKind::ProductUnavailable, "the product failed validation");
  if (!mm.dhb_is_zero()) throw Error(ErrorKind::NotCEF, "d_HB is nonzero up to degree " + std::to_string(module.cap()));
}

}  // namespace

ModuleElement twisted_product(const TruncatedModule& module, const MinimalModel& mm, const ModuleElement& x,
                              const ModuleElement& y) {
  require_product(module, mm);
  return module.harmonic(module.psi_inverse(module.product(module.phi_inverse(x), module.phi_inverse(y))));
}

TwistedProduct twisted_product(const TruncatedModule& module, const MinimalModel& mm, const RatVector& a,
                               const RatVector& b) {
  require_product(module, mm);
  module.hodge().harmonic_coordinates(a);
  module.hodge().harmonic_coordinates(b);
  TwistedProduct out;
  out.value = twisted_product(module, mm, module.embed(a), module.embed(b));
  out.form_product_harmonic = module.hodge().harmonic_total() * module.datum().product()->multiply(a, b);
  out.weight_zero_matches = module.weight_zero_part(out.value) == out.form_product_harmonic;
  return out;
}

std::optional<ModuleElement> solve_dG(const TruncatedModule& module, const ModuleElement& target, int degree) {
  const auto dst = module.basis_in_degree(degree);
  const auto src = module.basis_in_degree(degree - 1);
  RatVector b = zero_vector(dst.size());
  std::map<ModuleElement::Key, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
  for (const auto& [key, value] : target.terms()) {
    auto it = row_of.find(key);
    if (it == row_of.end()) return std::nullopt;  // not homogeneous of this degree
    b[it->second] = value;
  }
  const RatMatrix dm = module.degree_matrix(degree - 1, 1, [&](const ModuleElement& x) { return module.d_G(x); });
  const auto sol = solve(dm, b);
  if (!sol) return std::nullopt;
  ModuleElement y;
  for (std::size_t i = 0; i < src.size(); ++i) y.add(src[i], (*sol)[i]);
  return y;
}

ModuleElement gamma_witness(const TruncatedModule& module, const MinimalModel& mm, const RatVector& a,
                            const RatVector& b) {
  const TwistedProduct tp = twisted_product(module, mm, a, b);
  const ModuleElement target =
      module.phi_inverse(tp.value) - module.product(module.phi_inverse(module.embed(a)), module.phi_inverse(module.embed(b)));
  if (target.is_zero()) return {};
  const int degree = module.total_degree(target.terms().begin()->first);
  auto gamma = solve_dG(module, target, degree);
  if (!gamma || module.d_G(*gamma) != target)
    throw Error(ErrorKind::NoWitnessInWindow, "no gamma with d_G gamma = " + module.format(target) +
                                                  " at cap " + std::to_string(module.cap()));
  return *gamma;
}

}  // namespace hbm
