#include "hbm/cli.hpp"
#include "hbm/datum_io.hpp"
#include "hbm/error.hpp"
#include "hbm/fixed_point.hpp"
#include "hbm/fixtures.hpp"
#include "hbm/hirsch_brown.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace hbm;

namespace {

py::object fraction(const Rational& x) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(x));
}

Rational rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

std::vector<Rational> rationals(const py::iterable& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(rational(x));
  return out;
}

py::list fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(fraction(x));
  return out;
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["passed"] = c.passed;
  d["checked"] = c.checked;
  d["witness"] = c.witness;
  return d;
}

/// A datum truncated at a cap, with its minimal model.
class Workbench {
 public:
  Workbench(std::shared_ptr<const EquivariantDatum> datum, int cap)
      : module_(std::move(datum), cap), model_(minimal_model(module_)) {}

  py::list generators() const {
    py::list out;
    for (const auto& g : model_.generators()) out.append(py::make_tuple(g.label, g.degree));
    return out;
  }

  py::dict dhb() const {
    py::dict out;
    for (std::size_t j = 0; j < model_.generators().size(); ++j)
      out[py::str(model_.generators()[j].label)] = module_.format(model_.image(j));
    return out;
  }

  py::tuple cohomology() const {
    return py::make_tuple(cohomology_minimal(module_, model_).dims, cohomology_cartan(module_).dims);
  }

  py::list identities(std::size_t samples, std::uint64_t seed) const {
    py::list out;
    for (const auto& c : operator_identities(module_, model_, samples, seed).checks) out.append(check_dict(c));
    return out;
  }

  std::string extend(const std::string& label) const {
    return module_.format(canonical_extension(module_, model_, generator(label).vector));
  }

  py::dict product(const std::string& left, const std::string& right) const {
    const RatVector& a = generator(left).vector;
    const RatVector& b = generator(right).vector;
    const TwistedProduct tp = twisted_product(module_, model_, a, b);
    py::dict out;
    out["value"] = module_.format(tp.value);
    out["weight_zero_matches"] = tp.weight_zero_matches;
    out["gamma"] = module_.format(gamma_witness(module_, model_, a, b));
    return out;
  }

  int cap() const { return module_.cap(); }
  bool dhb_is_zero() const { return model_.dhb_is_zero(); }

 private:
  const HarmonicGenerator& generator(const std::string& label) const {
    if (auto j = model_.find(label)) return model_.generators()[*j];
    throw Error(ErrorKind::InvalidArgument, "'" + label + "' is not a harmonic generator");
  }

  TruncatedModule module_;
  MinimalModel model_;
};

using DatumPtr = std::shared_ptr<EquivariantDatum>;

}  // namespace

PYBIND11_MODULE(_hbmodel, m) {
  m.doc() = "Exact Hirsch-Brown minimal models and fixed-point calculus";

  // Errors carry their kind name in `kind`.
  static py::handle error_type = PyErr_NewException("hbmodel.HbmError", PyExc_RuntimeError, nullptr);
  m.attr("HbmError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<EquivariantDatum, DatumPtr>(m, "Datum")
      .def_property_readonly("labels", [](const EquivariantDatum& d) { return d.complex().labels(); })
      .def_property_readonly("rank", &EquivariantDatum::rank)
      .def_property_readonly("abelian", &EquivariantDatum::abelian)
      .def_property_readonly("max_t_degree", &EquivariantDatum::max_t_degree)
      .def_property_readonly("cap", &EquivariantDatum::cap)
      .def("serialize", &serialize_datum)
      .def("__eq__", [](const EquivariantDatum& a, const EquivariantDatum& b) { return a == b; });

  m.def("fixture_names", &fixture_names);
  m.def("fixture", [](const std::string& name) -> DatumPtr { return std::make_shared<EquivariantDatum>(fixture(name)); },
        py::arg("name"), "Shipped fixture (negative controls load unvalidated).");
  m.def("parse_datum", [](const std::string& text) -> DatumPtr {
    return std::make_shared<EquivariantDatum>(parse_datum(text));
  }, py::arg("text"));
  m.def("variants", [] {
    std::vector<std::pair<std::string, DatumPtr>> out;
    for (auto& [name, d] : fixture_variants()) out.emplace_back(name, std::make_shared<EquivariantDatum>(std::move(d)));
    return out;
  });
  m.def("validate", [](const EquivariantDatum& d, int cap) {
    py::list out;
    for (const auto& c : validate(d, cap).checks) out.append(check_dict(c));
    return out;
  }, py::arg("datum"), py::arg("cap") = 10);

  py::class_<Workbench>(m, "Workbench")
      .def(py::init<DatumPtr, int>(), py::arg("datum"), py::arg("cap") = 10)
      .def_property_readonly("cap", &Workbench::cap)
      .def_property_readonly("dhb_is_zero", &Workbench::dhb_is_zero)
      .def("generators", &Workbench::generators)
      .def("dhb", &Workbench::dhb)
      .def("cohomology", &Workbench::cohomology, "(minimal-model dims, Cartan dims) for degrees 0..cap")
      .def("identities", &Workbench::identities, py::arg("samples") = 50, py::arg("seed") = 1)
      .def("extend", &Workbench::extend, py::arg("label"))
      .def("product", &Workbench::product, py::arg("left"), py::arg("right"));

  m.def("coefficients", [](const py::iterable& mu) {
    return fractions(coefficients_from_moments(FixedPointData::isolated(rationals(mu))).c);
  }, py::arg("mu"));
  m.def("relation", [](const py::iterable& mu) {
    return relation_string(coefficients_from_moments(FixedPointData::isolated(rationals(mu))));
  }, py::arg("mu"));
  m.def("moment_powers", [](const py::iterable& mu, int j_max) {
    py::list out;
    for (const auto& p : moment_powers(FixedPointData::isolated(rationals(mu)), j_max)) out.append(fraction(p.average));
    return out;
  }, py::arg("mu"), py::arg("j_max") = 8);
  m.def("volume", [](const py::iterable& mu, const py::iterable& euler) {
    return fraction(volume_from_data(FixedPointData::isolated(rationals(mu), rationals(euler))).volume);
  }, py::arg("mu"), py::arg("euler"));
  m.def("cp2_weighted", [](long a, long b, const py::object& s) {
    const WeightedCP2 r = cp2_weighted(a, b, rational(s));
    py::dict out;
    out["mu"] = fractions(r.data.expanded());
    out["area"] = fraction(r.area);
    out["coefficients"] = fractions(r.coefficients.c);
    out["relation"] = relation_string(r.coefficients);
    out["passed"] = r.report.all_passed();
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("s"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run an hbm command; returns (exit code, stdout, stderr).");
}
