#include "hbm/datum_io.hpp"

#include "hbm/error.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hbm {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& key, const std::string& what) const {
    std::string where = source_;
    if (node.Mark().line >= 0) where += ":" + std::to_string(node.Mark().line + 1);
    throw Error(ErrorKind::ParseError, where + ": key '" + key + "': " + what);
  }

  void only_keys(const YAML::Node& map, const std::string& context, const std::set<std::string>& allowed) const {
    if (!map.IsMap()) fail(map, context, "expected a mapping");
    for (const auto& kv : map) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) fail(kv.first, key, "unknown key in " + context);
    }
  }

  YAML::Node required(const YAML::Node& map, const std::string& key) const {
    const YAML::Node n = map[key];
    if (!n) fail(map, key, "missing");
    return n;
  }

  YAML::Node sequence(const YAML::Node& n, const std::string& key) const {
    if (!n.IsSequence()) fail(n, key, "expected a list");
    return n;
  }

  std::string scalar(const YAML::Node& n, const std::string& key) const {
    if (!n.IsScalar()) fail(n, key, "expected a scalar");
    return n.as<std::string>();
  }

  int integer(const YAML::Node& n, const std::string& key) const {
    const std::string s = scalar(n, key);
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(n, key, "expected an integer, got '" + s + "'");
    }
  }

  Rational rational(const YAML::Node& n, const std::string& key) const {
    const std::string s = scalar(n, key);
    try {
      return parse_rational(s);
    } catch (const Error& e) {
      fail(n, key, e.what());
    }
  }

  std::size_t label(const YAML::Node& n, const std::string& key, const std::map<std::string, std::size_t>& index) const {
    const std::string s = scalar(n, key);
    auto it = index.find(s);
    if (it == index.end()) fail(n, key, "unknown basis label '" + s + "'");
    return it->second;
  }

 private:
  std::string source_;
};

}  // namespace

EquivariantDatum parse_datum_unchecked(std::string_view text, std::string_view source) {
  const Reader rd(source);
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::ParseError, std::string(source) + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  rd.only_keys(root, "datum", {"degrees", "differential", "inner", "contractions", "product", "cap"});

  // degrees
  std::map<int, std::vector<std::string>> by_degree;
  int top = -1;
  if (const YAML::Node degs = root["degrees"]) {
    for (const auto& entry : rd.sequence(degs, "degrees")) {
      rd.only_keys(entry, "degrees", {"degree", "labels"});
      const YAML::Node dn = rd.required(entry, "degree");
      const int m = rd.integer(dn, "degree");
      if (m < 0) rd.fail(dn, "degree", "degrees must be >= 0");
      if (by_degree.count(m)) rd.fail(dn, "degree", "degree " + std::to_string(m) + " listed twice");
      std::vector<std::string> labels;
      for (const auto& l : rd.sequence(rd.required(entry, "labels"), "labels")) labels.push_back(rd.scalar(l, "labels"));
      by_degree[m] = std::move(labels);
      top = std::max(top, m);
    }
  }
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
  for (auto& [m, l] : by_degree) labels[static_cast<std::size_t>(m)] = l;

  std::map<std::string, std::size_t> index;
  std::vector<int> degree_of;
  for (std::size_t m = 0; m < labels.size(); ++m)
    for (const auto& l : labels[m]) {
      if (!index.emplace(l, index.size()).second) rd.fail(root["degrees"], "labels", "duplicate basis label '" + l + "'");
      degree_of.push_back(static_cast<int>(m));
    }
  const std::size_t n = index.size();

  auto read_entries = [&](const YAML::Node& list, const std::string& key, RatMatrix& into) {
    for (const auto& e : rd.sequence(list, key)) {
      rd.only_keys(e, key, {"from_label", "to_label", "coeff"});
      const std::size_t from = rd.label(rd.required(e, "from_label"), "from_label", index);
      const std::size_t to = rd.label(rd.required(e, "to_label"), "to_label", index);
      into.add(to, from, rd.rational(rd.required(e, "coeff"), "coeff"));
    }
  };

  RatMatrix d(n, n);
  if (const YAML::Node dn = root["differential"]) read_entries(dn, "differential", d);

  RatMatrix inner = RatMatrix::identity(n);
  if (const YAML::Node in = root["inner"]) {
    std::map<int, std::map<std::pair<std::size_t, std::size_t>, std::pair<Rational, YAML::Node>>> given;
    for (const auto& e : rd.sequence(in, "inner")) {
      rd.only_keys(e, "inner", {"degree", "row_label", "col_label", "coeff"});
      const int m = rd.integer(rd.required(e, "degree"), "degree");
      const std::size_t r = rd.label(rd.required(e, "row_label"), "row_label", index);
      const std::size_t c = rd.label(rd.required(e, "col_label"), "col_label", index);
      if (degree_of[r] != m || degree_of[c] != m) rd.fail(e, "inner", "labels do not belong to degree " + std::to_string(m));
      given[m][{r, c}] = {rd.rational(rd.required(e, "coeff"), "coeff"), e};
    }
    for (const auto& [m, entries] : given) {
      for (std::size_t i = 0; i < n; ++i)
        if (degree_of[i] == m) inner.set(i, i, 0);
      for (const auto& [rc, val] : entries) {
        const auto mirror = entries.find({rc.second, rc.first});
        if (mirror != entries.end() && mirror->second.first != val.first)
          rd.fail(val.second, "inner", "entry disagrees with its transpose");
        inner.set(rc.first, rc.second, val.first);
        inner.set(rc.second, rc.first, val.first);
      }
    }
  }

  std::vector<Contraction> contractions;
  if (const YAML::Node cn = root["contractions"]) {
    for (const auto& e : rd.sequence(cn, "contractions")) {
      rd.only_keys(e, "contractions", {"t_degree", "entries"});
      Contraction con;
      con.t_degree = rd.integer(rd.required(e, "t_degree"), "t_degree");
      con.op = RatMatrix(n, n);
      read_entries(rd.required(e, "entries"), "entries", con.op);
      contractions.push_back(std::move(con));
    }
  }

  int cap = 10;
  if (const YAML::Node c = root["cap"]) {
    cap = rd.integer(c, "cap");
    if (cap < 2 || cap % 2 != 0) rd.fail(c, "cap", "cap must be an even integer >= 2");
  }

  try {
    GradedComplex complex(labels, std::move(d), std::move(inner));
    std::optional<ProductTable> product;
    if (const YAML::Node pn = root["product"]) {
      std::vector<ProductEntry> entries;
      for (const auto& e : rd.sequence(pn, "product")) {
        rd.only_keys(e, "product", {"left_label", "right_label", "out_label", "coeff"});
        entries.push_back({rd.label(rd.required(e, "left_label"), "left_label", index),
                           rd.label(rd.required(e, "right_label"), "right_label", index),
                           rd.label(rd.required(e, "out_label"), "out_label", index),
                           rd.rational(rd.required(e, "coeff"), "coeff")});
      }
      product.emplace(complex, std::move(entries));
    }
    return EquivariantDatum(std::move(complex), std::move(contractions), std::move(product), cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, std::string(source) + ": " + e.what());
  }
}

EquivariantDatum parse_datum(std::string_view text, std::string_view source) {
  EquivariantDatum datum = parse_datum_unchecked(text, source);
  validate(datum, datum.cap());
  return datum;
}

EquivariantDatum load_datum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str(), path.string());
}

std::string serialize_datum(const EquivariantDatum& datum) {
  const GradedComplex& c = datum.complex();
  YAML::Emitter out;
  out << YAML::BeginMap;

  out << YAML::Key << "degrees" << YAML::Value << YAML::BeginSeq;
  for (int m = 0; m <= c.top_degree(); ++m) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "degree" << YAML::Value << m << YAML::Key << "labels"
        << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& l : c.labels()[static_cast<std::size_t>(m)]) out << YAML::DoubleQuoted << l;
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndSeq;

  auto entries = [&](const RatMatrix& m) {
    out << YAML::BeginSeq;
    m.for_each([&](std::size_t r, std::size_t col, const Rational& v) {
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "from_label" << YAML::Value << YAML::DoubleQuoted
          << c.label(col) << YAML::Key << "to_label" << YAML::Value << YAML::DoubleQuoted << c.label(r) << YAML::Key
          << "coeff" << YAML::Value << YAML::DoubleQuoted << to_string(v) << YAML::EndMap;
    });
    out << YAML::EndSeq;
  };

  out << YAML::Key << "differential" << YAML::Value;
  entries(c.d_total());

  bool any_inner = false;
  for (int m = 0; m <= c.top_degree(); ++m)
    any_inner = any_inner || c.inner(m) != RatMatrix::identity(c.dim(m));
  if (any_inner) {
    out << YAML::Key << "inner" << YAML::Value << YAML::BeginSeq;
    for (int m = 0; m <= c.top_degree(); ++m) {
      const RatMatrix block = c.inner(m);
      if (block == RatMatrix::identity(c.dim(m))) continue;
      block.for_each([&](std::size_t r, std::size_t col, const Rational& v) {
        if (r > col) return;
        out << YAML::Flow << YAML::BeginMap << YAML::Key << "degree" << YAML::Value << m << YAML::Key << "row_label"
            << YAML::Value << YAML::DoubleQuoted << c.label(c.offset(m) + r) << YAML::Key << "col_label" << YAML::Value
            << YAML::DoubleQuoted << c.label(c.offset(m) + col) << YAML::Key << "coeff" << YAML::Value
            << YAML::DoubleQuoted << to_string(v) << YAML::EndMap;
      });
    }
    out << YAML::EndSeq;
  }

  out << YAML::Key << "contractions" << YAML::Value << YAML::BeginSeq;
  for (const auto& con : datum.contractions()) {
    out << YAML::BeginMap << YAML::Key << "t_degree" << YAML::Value << con.t_degree << YAML::Key << "entries"
        << YAML::Value;
    entries(con.op);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  if (const ProductTable* p = datum.product()) {
    out << YAML::Key << "product" << YAML::Value;
    if (p->entries().empty()) out << YAML::Flow;
    out << YAML::BeginSeq;
    for (const auto& e : p->entries())
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "left_label" << YAML::Value << YAML::DoubleQuoted
          << c.label(e.left) << YAML::Key << "right_label" << YAML::Value << YAML::DoubleQuoted << c.label(e.right)
          << YAML::Key << "out_label" << YAML::Value << YAML::DoubleQuoted << c.label(e.out) << YAML::Key << "coeff"
          << YAML::Value << YAML::DoubleQuoted << to_string(e.coeff) << YAML::EndMap;
    out << YAML::EndSeq;
  }

  out << YAML::Key << "cap" << YAML::Value << datum.cap();
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace hbm
