#include "hbm/cli.hpp"

#include "hbm/datum_io.hpp"
#include "hbm/error.hpp"
#include "hbm/fixed_point.hpp"
#include "hbm/fixtures.hpp"
#include "hbm/hirsch_brown.hpp"
#include "hbm/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace hbm {

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidComplex:
    case ErrorKind::IdentityFailed:
    case ErrorKind::TheoremMismatch:
    case ErrorKind::NoWitnessInWindow:
    case ErrorKind::InconsistentFixedPointData:
      return 1;
    default:
      return 2;
  }
}

bool is_fixture(const std::string& name) {
  const auto& a = fixture_names();
  const auto& b = negative_fixture_names();
  return std::find(a.begin(), a.end(), name) != a.end() || std::find(b.begin(), b.end(), name) != b.end();
}

std::string source_text(const std::string& name) {
  if (is_fixture(name)) return std::string(fixture_text(name));
  std::ifstream in(name);
  if (!in) throw Error(ErrorKind::InvalidArgument, "'" + name + "' is neither a shipped fixture nor a readable file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  std::shared_ptr<const EquivariantDatum> datum;
  int cap = 0;
};

Loaded load(const std::string& name, int cap_flag, bool validated) {
  const std::string text = source_text(name);
  Loaded l;
  l.datum = std::make_shared<const EquivariantDatum>(validated ? parse_datum(text, name)
                                                               : parse_datum_unchecked(text, name));
  l.cap = cap_flag >= 0 ? cap_flag : l.datum->cap();
  const int floor = 2 * l.datum->max_t_degree();
  if (l.cap < floor)
    throw Error(ErrorKind::InvalidArgument, "cap " + std::to_string(l.cap) + " is below 2 * (largest generator degree) = " +
                                                std::to_string(floor) + "; no nontrivial check fits");
  if (l.cap % 2 != 0) throw Error(ErrorKind::InvalidArgument, "cap must be even");
  return l;
}

void echo(Report& rep, const std::string& name, const TruncatedModule& m) {
  rep.section("inputs");
  rep.line("datum", name);
  rep.line("cap", std::to_string(m.cap()));
  rep.line("window", "total degrees 0.." + std::to_string(m.cap()) + ", operator identities on t-weights 0.." +
                         std::to_string(m.operator_window()));
}

std::string vector_text(const TruncatedModule& m, const RatVector& v) { return m.format(m.embed(v)); }

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

const HarmonicGenerator& generator(const MinimalModel& mm, const std::string& label) {
  if (auto j = mm.find(label)) return mm.generators()[*j];
  std::string known;
  for (const auto& g : mm.generators()) known += (known.empty() ? "" : ", ") + g.label;
  throw Error(ErrorKind::InvalidArgument, "'" + label + "' is not a harmonic generator (known: " + known + ")");
}

int finish(const Report& rep, std::ostream& out) {
  out << rep.str();
  return rep.all_passed() ? 0 : 1;
}

int cmd_check(const std::string& name, int cap_flag, std::ostream& out) {
  const Loaded l = load(name, cap_flag, false);
  Report rep;
  rep.section("inputs");
  rep.line("datum", name);
  rep.line("cap", std::to_string(l.cap));
  rep.section("validation");
  const ValidationReport v = validate_report(*l.datum, l.cap);
  for (const auto& c : v.checks) rep.check(c);
  rep.line("product", v.product_ok ? "ok" : v.product_note);
  if (!v.fatal_ok) return finish(rep, out);

  const TruncatedModule m(l.datum, l.cap);
  const MinimalModel mm = minimal_model(m);
  rep.line("window", "operator identities on t-weights 0.." + std::to_string(m.operator_window()));
  rep.section("identities");
  rep.check(check_PQ_zero(m));
  for (const auto& c : homotopy_identities(m, mm).checks) rep.check(c);
  for (const auto& c : dbar_trichotomy(m).checks) rep.check(c);
  return finish(rep, out);
}

int cmd_hodge(const std::string& name, std::ostream& out) {
  const Loaded l = load(name, -1, true);
  const TruncatedModule m(l.datum, 2 * l.datum->max_t_degree());
  const HodgeData& h = m.hodge();
  const GradedComplex& c = m.complex();
  Report rep;
  rep.section("inputs");
  rep.line("datum", name);
  rep.section("hodge");
  for (int deg = 0; deg <= c.top_degree(); ++deg) {
    rep.line("degree " + std::to_string(deg),
             "dim " + std::to_string(c.dim(deg)) + ", harmonic " + std::to_string(h.harmonic_dim(deg)) + ", exact " +
                 std::to_string(h.boundary_basis(deg).size()) + ", coexact " +
                 std::to_string(h.coexact_basis(deg).size()));
  }
  rep.section("harmonic generators");
  for (const auto& g : h.generators())
    rep.line(g.label, "degree " + std::to_string(g.degree) + ", " + vector_text(m, g.vector));
  return finish(rep, out);
}

int cmd_dhb(const std::string& name, int cap_flag, std::ostream& out) {
  const Loaded l = load(name, cap_flag, true);
  const TruncatedModule m(l.datum, l.cap);
  const MinimalModel mm = minimal_model(m);
  Report rep;
  echo(rep, name, m);
  rep.section("d_HB");
  for (std::size_t j = 0; j < mm.generators().size(); ++j)
    rep.line("d_HB(" + mm.generators()[j].label + ")", m.format(mm.image(j)));
  rep.line("d_HB = 0", mm.dhb_is_zero() ? "yes" : "no");
  rep.section("checks");
  rep.check("(I(x)H) dbar = phi d_G phi^-1 on generators", true);
  return finish(rep, out);
}

int cmd_cohomology(const std::string& name, int cap_flag, std::ostream& out) {
  const Loaded l = load(name, cap_flag, true);
  const TruncatedModule m(l.datum, l.cap);
  const MinimalModel mm = minimal_model(m);
  const CohomologyTable a = cohomology_minimal(m, mm);
  const CohomologyTable b = cohomology_cartan(m);
  auto row = [](const CohomologyTable& t) {
    std::string s;
    for (std::size_t i = 0; i < t.dims.size(); ++i) s += (i ? " " : "") + std::to_string(t.dims[i]);
    return s;
  };
  Report rep;
  echo(rep, name, m);
  rep.section("cohomology");
  rep.line("minimal model", row(a));
  rep.line("cartan model", row(b));
  rep.section("checks");
  rep.check("tables agree", a.dims == b.dims, row(a) + " vs " + row(b));
  return finish(rep, out);
}

int cmd_extend(const std::string& name, int cap_flag, const std::string& label, std::ostream& out) {
  const Loaded l = load(name, cap_flag, true);
  const TruncatedModule m(l.datum, l.cap);
  const MinimalModel mm = minimal_model(m);
  const HarmonicGenerator& g = generator(mm, label);
  const ModuleElement ext = canonical_extension(m, mm, g.vector);
  Report rep;
  echo(rep, name, m);
  rep.section("extension");
  rep.line("class", g.label);
  rep.line("phi^-1(" + g.label + ")", m.format(ext));
  rep.section("checks");
  rep.check("d_G phi^-1(h) = 0", m.d_G(ext).is_zero(), m.format(m.d_G(ext)));
  return finish(rep, out);
}

int cmd_product(const std::string& name, int cap_flag, const std::string& left, const std::string& right,
                std::ostream& out) {
  const Loaded l = load(name, cap_flag, true);
  const TruncatedModule m(l.datum, l.cap);
  if (!l.datum->abelian()) throw Error(ErrorKind::NotAbelian, "twisted products need a torus action");
  const MinimalModel mm = minimal_model(m);
  const HarmonicGenerator& a = generator(mm, left);
  const HarmonicGenerator& b = generator(mm, right);
  const TwistedProduct tp = twisted_product(m, mm, a.vector, b.vector);
  const ModuleElement gamma = gamma_witness(m, mm, a.vector, b.vector);
  Report rep;
  echo(rep, name, m);
  rep.section("product");
  rep.line(a.label + " ~ " + b.label, m.format(tp.value));
  rep.line("H(" + a.label + " " + b.label + ")", vector_text(m, tp.form_product_harmonic));
  rep.line("gamma", m.format(gamma));
  rep.section("checks");
  rep.check("weight-0 part equals H(a b)", tp.weight_zero_matches, m.format(tp.value));
  const ModuleElement lhs = m.phi_inverse(tp.value);
  const ModuleElement rhs = m.product(m.phi_inverse(m.embed(a.vector)), m.phi_inverse(m.embed(b.vector))) + m.d_G(gamma);
  rep.check("phi^-1(a ~ b) = phi^-1(a) phi^-1(b) + d_G gamma", lhs == rhs, m.format(lhs - rhs));
  return finish(rep, out);
}

int cmd_identities(const std::string& name, int cap_flag, std::ostream& out) {
  const Loaded l = load(name, cap_flag, true);
  const TruncatedModule m(l.datum, l.cap);
  const MinimalModel mm = minimal_model(m);
  Report rep;
  echo(rep, name, m);
  rep.section("identities");
  for (const auto& c : operator_identities(m, mm).checks) rep.check(c);
  return finish(rep, out);
}

int cmd_coeffs(const std::string& mu_text, const std::string& euler_text, const std::string& mult_text, int n,
               std::ostream& out) {
  const std::vector<Rational> mu = rational_list(mu_text);
  std::vector<Rational> euler, mult;
  if (!euler_text.empty()) euler = rational_list(euler_text);
  if (!mult_text.empty()) mult = rational_list(mult_text);
  if (!euler.empty() && euler.size() != mu.size())
    throw Error(ErrorKind::InvalidArgument, "--euler needs one value per moment value");
  if (!mult.empty() && mult.size() != mu.size())
    throw Error(ErrorKind::InvalidArgument, "--mult needs one value per moment value");
  FixedPointData data;
  int total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    FixedComponent comp{mu[i], 1, std::nullopt};
    if (!mult.empty()) {
      if (mult[i].get_den() != 1 || mult[i] < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities are positive integers");
      comp.multiplicity = static_cast<int>(mult[i].get_num().get_si());
    }
    if (!euler.empty()) comp.euler = euler[i];
    total += comp.multiplicity;
    data.components.push_back(comp);
  }
  data.n = n >= 0 ? n : total - 1;
  return finish(relation_report(data), out);
}

int cmd_cp2(long a, long b, const std::string& s, std::ostream& out) {
  return finish(cp2_weighted(a, b, parse_rational(s)).report, out);
}

int cmd_examples(std::ostream& out) {
  Report rep;
  rep.section("fixtures");
  for (const auto& name : fixture_names()) rep.line(name, fixture_description(name));
  rep.section("negative controls");
  for (const auto& name : negative_fixture_names()) rep.line(name, fixture_description(name));
  return finish(rep, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hirsch-Brown minimal model workbench", "hbm"};
  app.require_subcommand(1);

  std::string datum, klass, left, right, mu, euler, mult, s;
  int cap = -1, n = -1;
  long a = 0, b = 0;

  auto with_datum = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("datum", datum, "fixture name or datum file")->required();
    sub->add_option("--cap", cap, "t-weight cap W (default: the datum's cap, 10)");
    return sub;
  };
  CLI::App* check = with_datum("check", "validate a datum and run the core identities");
  CLI::App* hodge = app.add_subcommand("hodge", "Hodge decomposition of the form complex");
  hodge->add_option("datum", datum, "fixture name or datum file")->required();
  CLI::App* dhb = with_datum("dhb", "transferred differential on the harmonic generators");
  CLI::App* coh = with_datum("cohomology", "equivariant cohomology dimensions by two routes");
  CLI::App* ext = with_datum("extend", "canonical equivariant extension of a harmonic class");
  ext->add_option("--class", klass, "harmonic generator label")->required();
  CLI::App* prod = with_datum("product", "twisted product of two harmonic classes");
  prod->add_option("--left", left, "harmonic generator label")->required();
  prod->add_option("--right", right, "harmonic generator label")->required();
  CLI::App* ids = with_datum("identities", "full operator-identity suite");
  CLI::App* coeffs = app.add_subcommand("cpn-coeffs", "ring relation of a circle action on CP^n");
  coeffs->add_option("--mu", mu, "moment values p/q,...")->required();
  coeffs->add_option("--euler", euler, "Euler classes at isolated points p/q,...");
  coeffs->add_option("--mult", mult, "multiplicities r+1,...");
  coeffs->add_option("--n", n, "dimension parameter (default: sum of multiplicities - 1)");
  CLI::App* cp2 = app.add_subcommand("cpn-cp2", "weighted circle action on CP^2");
  cp2->add_option("--a", a, "first weight")->required();
  cp2->add_option("--b", b, "second weight")->required();
  cp2->add_option("--s", s, "scale; the volume is s^2")->required();
  CLI::App* examples = app.add_subcommand("examples", "list shipped fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(datum, cap, out);
    if (hodge->parsed()) return cmd_hodge(datum, out);
    if (dhb->parsed()) return cmd_dhb(datum, cap, out);
    if (coh->parsed()) return cmd_cohomology(datum, cap, out);
    if (ext->parsed()) return cmd_extend(datum, cap, klass, out);
    if (prod->parsed()) return cmd_product(datum, cap, left, right, out);
    if (ids->parsed()) return cmd_identities(datum, cap, out);
    if (coeffs->parsed()) return cmd_coeffs(mu, euler, mult, n, out);
    if (cp2->parsed()) return cmd_cp2(a, b, s, out);
    if (examples->parsed()) return cmd_examples(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace hbm
