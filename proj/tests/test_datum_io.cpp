#include "helpers.hpp"
#include "module_helpers.hpp"
#include "hbm/datum_io.hpp"
#include "hbm/hirsch_brown.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hbm;
using namespace hbm::test;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_datum(text, "in.yaml");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) return e.what();
    return std::string("wrong kind: ") + e.what();
  }
  return "no error";
}

}  // namespace

TEST_SUITE("datum_io") {

TEST_CASE("round trip on every fixture and variant") {
  for (const auto& [name, datum] : all_data()) {
    CAPTURE(name);
    const std::string text = serialize_datum(datum);
    const EquivariantDatum again = parse_datum(text, name);
    CHECK(again == datum);
    CHECK(serialize_datum(again) == text);
  }
}

TEST_CASE("malformed rational names the line and key") {
  const std::string msg = parse_error(R"(degrees:
  - {degree: 0, labels: [a]}
  - {degree: 1, labels: [b]}
differential:
  - {from_label: a, to_label: b, coeff: "1/0"}
contractions: []
)");
  CHECK(msg.find("ParseError") == 0);
  CHECK(msg.find("in.yaml:5") != std::string::npos);
  CHECK(msg.find("coeff") != std::string::npos);
}

TEST_CASE("structural errors are parse errors") {
  CHECK(parse_error("degrees: []\ncontractions: []\ncolour: red\n").find("'colour'") != std::string::npos);
  CHECK(parse_error("degrees: []\ncontractions: []\ncolour: red\n").find("in.yaml:3") != std::string::npos);
  CHECK(parse_error(R"(degrees:
  - {degree: 0, labels: [a]}
differential:
  - {from_label: a, to_label: nowhere, coeff: "1"}
contractions: []
)").find("nowhere") != std::string::npos);
  CHECK(parse_error("degrees: [\n").find("ParseError") == 0);
  CHECK(parse_error("degrees: []\ncontractions: []\ncap: 5\n").find("cap") != std::string::npos);
  CHECK(parse_error(R"(degrees:
  - {degree: 0, labels: [a]}
inner:
  - {degree: 0, row_label: a, col_label: a, coeff: "0"}
contractions: []
)").find("ParseError") == 0);
}

TEST_CASE("invalid relations surface as InvalidComplex") {
  CHECK_ERROR_KIND(parse_datum(fixture_text("broken-cartan")), ErrorKind::InvalidComplex);
  CHECK_NOTHROW(parse_datum_unchecked(fixture_text("broken-cartan")));
}

TEST_CASE("empty degrees list is the zero complex") {
  const EquivariantDatum d = parse_datum("degrees: []\ncontractions: []\n");
  CHECK(d.complex().total_dim() == 0);
  const TruncatedModule m = module_of(d, 10);
  const MinimalModel mm = minimal_model(m);
  CHECK(mm.generators().empty());
  const auto a = cohomology_minimal(m, mm).dims;
  CHECK(a == std::vector<std::size_t>(11, 0));
  CHECK(cohomology_cartan(m).dims == a);
}

TEST_CASE("JSON is accepted") {
  const EquivariantDatum d = parse_datum(R"({"degrees": [{"degree": 0, "labels": ["1"]}, {"degree": 1, "labels": ["dtheta"]}],
 "contractions": [{"t_degree": 2, "entries": [{"from_label": "dtheta", "to_label": "1", "coeff": "1"}]}]})");
  CHECK(d.complex() == fixture("free-rotation").complex());
  CHECK(d.contractions() == fixture("free-rotation").contractions());
}

TEST_CASE("load from a file") {
  const auto path = std::filesystem::temp_directory_path() / "hbm_datum_io_test.yaml";
  {
    std::ofstream out(path);
    out << fixture_text("sphere-rotation");
  }
  CHECK(load_datum(path) == fixture("sphere-rotation"));
  std::filesystem::remove(path);
  CHECK_ERROR_KIND(load_datum(path), ErrorKind::ParseError);
}

}
