#include "hbm/equivariant.hpp"

#include "hbm/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hbm {

// ---------------------------------------------------------------- products

ProductTable::ProductTable(const GradedComplex& c, std::vector<ProductEntry> entries) : entries_(std::move(entries)) {
  if (c.dim(0) == 0) throw Error(ErrorKind::InvalidComplex, "a product needs a degree-0 unit element");
  const std::size_t n = c.total_dim();
  unit_ = c.offset(0);

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> given;
  for (const auto& e : entries_) {
    if (e.left >= n || e.right >= n || e.out >= n) throw Error(ErrorKind::InvalidComplex, "product entry out of range");
    if (c.degree_of(e.out) != c.degree_of(e.left) + c.degree_of(e.right))
      throw Error(ErrorKind::InvalidComplex, "product " + c.label(e.left) + "*" + c.label(e.right) + " -> " +
                                                 c.label(e.out) + " does not add degrees");
    given[{e.left, e.right}][e.out] += e.coeff;
  }
  auto table = given;
  for (const auto& [key, out] : given) {
    const auto swapped = std::pair{key.second, key.first};
    if (given.count(swapped)) continue;
    const int sign = (c.degree_of(key.first) * c.degree_of(key.second)) % 2 ? -1 : 1;
    auto& target = table[swapped];
    for (const auto& [k, v] : out) target[k] = sign * v;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!table.count({unit_, x})) table[{unit_, x}] = {{x, Rational(1)}};
    if (!table.count({x, unit_})) table[{x, unit_}] = {{x, Rational(1)}};
  }
  left_.assign(n, RatMatrix(n, n));
  for (const auto& [key, out] : table)
    for (const auto& [k, v] : out) left_[key.first].set(k, key.second, v);
}

RatVector ProductTable::multiply(const RatVector& x, const RatVector& y) const {
  RatVector out = zero_vector(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    out = out + x[i] * (left_[i] * y);
  }
  return out;
}

// ----------------------------------------------------------------- datum

EquivariantDatum::EquivariantDatum(GradedComplex complex, std::vector<Contraction> contractions,
                                   std::optional<ProductTable> product, int cap)
    : complex_(std::move(complex)), contractions_(std::move(contractions)), product_(std::move(product)), cap_(cap) {
  for (std::size_t j = 0; j < contractions_.size(); ++j) {
    const auto& con = contractions_[j];
    if (con.t_degree < 2 || con.t_degree % 2 != 0)
      throw Error(ErrorKind::InvalidComplex, "generator t_" + std::to_string(j + 1) + " must have even degree >= 2");
    if (!complex_.has_degree(con.op, 1 - con.t_degree))
      throw Error(ErrorKind::InvalidComplex,
                  "contraction " + std::to_string(j + 1) + " does not have degree " + std::to_string(1 - con.t_degree));
  }
  if (cap_ < 0 || cap_ % 2 != 0) throw Error(ErrorKind::InvalidArgument, "cap must be an even integer >= 0");
}

bool EquivariantDatum::abelian() const {
  return std::all_of(contractions_.begin(), contractions_.end(), [](const Contraction& c) { return c.t_degree == 2; });
}

int EquivariantDatum::max_t_degree() const {
  int m = 0;
  for (const auto& c : contractions_) m = std::max(m, c.t_degree);
  return m;
}

// --------------------------------------------------------------- elements

void ModuleElement::add(Key key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ModuleElement::coefficient(Key key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [k, v] : o.terms_) add(k, v);
  dropped_ += o.dropped_;
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [k, v] : o.terms_) add(k, -v);
  dropped_ += o.dropped_;
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

// ---------------------------------------------------------------- module

TruncatedModule::TruncatedModule(std::shared_ptr<const EquivariantDatum> datum, int cap)
    : datum_(std::move(datum)), cap_(cap) {
  if (cap_ < 0 || cap_ % 2 != 0) throw Error(ErrorKind::InvalidArgument, "cap must be an even integer >= 0");
  hodge_ = std::make_shared<const HodgeData>(datum_->complex());

  const auto& cons = datum_->contractions();
  const std::size_t k = cons.size();
  std::vector<int> exps(k, 0);
  std::function<void(std::size_t, int)> enumerate = [&](std::size_t j, int weight) {
    if (j == k) {
      monomials_.push_back({exps, weight});
      return;
    }
    for (int a = 0; weight + a * cons[j].t_degree <= cap_; ++a) {
      exps[j] = a;
      enumerate(j + 1, weight + a * cons[j].t_degree);
    }
    exps[j] = 0;
  };
  enumerate(0, 0);
  std::sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.exponents < b.exponents;
  });
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].exponents, i);
  times_.resize(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto e = monomials_[i].exponents;
      ++e[j];
      times_[i].push_back(monomial_index(e));
    }
  }
}

std::optional<std::size_t> TruncatedModule::monomial_index(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TruncatedModule::times_generator(std::size_t mono, std::size_t j) const {
  return times_.at(mono).at(j);
}

std::optional<std::size_t> TruncatedModule::times_monomial(std::size_t a, std::size_t b) const {
  auto e = monomials_.at(a).exponents;
  const auto& f = monomials_.at(b).exponents;
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += f[j];
  return monomial_index(e);
}

int TruncatedModule::total_degree(ModuleElement::Key key) const {
  return monomials_.at(key.first).weight + complex().degree_of(key.second);
}

std::vector<ModuleElement::Key> TruncatedModule::basis_in_degree(int m) const {
  std::vector<ModuleElement::Key> out;
  const GradedComplex& c = complex();
  for (std::size_t a = 0; a < monomials_.size(); ++a) {
    const int form = m - monomials_[a].weight;
    for (std::size_t i = 0; i < c.dim(form); ++i) out.emplace_back(a, c.offset(form) + i);
  }
  return out;
}

std::vector<ModuleElement::Key> TruncatedModule::basis_up_to_weight(int max_weight) const {
  std::vector<ModuleElement::Key> out;
  for (std::size_t a = 0; a < monomials_.size(); ++a) {
    if (monomials_[a].weight > max_weight) continue;
    for (std::size_t i = 0; i < complex().total_dim(); ++i) out.emplace_back(a, i);
  }
  return out;
}

ModuleElement TruncatedModule::basis_element(ModuleElement::Key key) const {
  ModuleElement x;
  x.add(key, 1);
  return x;
}

ModuleElement TruncatedModule::embed(const RatVector& v, std::size_t mono) const {
  if (v.size() != complex().total_dim()) throw Error(ErrorKind::InvalidArgument, "vector length does not match the complex");
  ModuleElement x;
  for (std::size_t i = 0; i < v.size(); ++i) x.add({mono, i}, v[i]);
  return x;
}

RatVector TruncatedModule::form_part(const ModuleElement& x, std::size_t mono) const {
  RatVector v = zero_vector(complex().total_dim());
  for (const auto& [key, value] : x.terms())
    if (key.first == mono) v[key.second] = value;
  return v;
}

ModuleElement TruncatedModule::apply_form(const RatMatrix& op, const ModuleElement& x) const {
  ModuleElement y;
  y.note_dropped(x.dropped());
  for (const auto& [key, value] : x.terms())
    op.for_each_in_column(key.second, [&](std::size_t r, const Rational& v) { y.add({key.first, r}, value * v); });
  return y;
}

ModuleElement TruncatedModule::multiply_monomial(std::size_t mono, const ModuleElement& x) const {
  ModuleElement y;
  y.note_dropped(x.dropped());
  std::size_t dropped = 0;
  for (const auto& [key, value] : x.terms()) {
    if (auto target = times_monomial(key.first, mono))
      y.add({*target, key.second}, value);
    else
      ++dropped;
  }
  y.note_dropped(dropped);
  return y;
}

ModuleElement TruncatedModule::partial(const ModuleElement& x) const {
  ModuleElement y;
  y.note_dropped(x.dropped());
  std::size_t dropped = 0;
  const auto& cons = datum_->contractions();
  for (std::size_t j = 0; j < cons.size(); ++j) {
    for (const auto& [key, value] : x.terms()) {
      const auto target = times_[key.first][j];
      cons[j].op.for_each_in_column(key.second, [&](std::size_t r, const Rational& v) {
        if (target)
          y.add({*target, r}, value * v);
        else
          ++dropped;
      });
    }
  }
  y.note_dropped(dropped);
  return y;
}

ModuleElement TruncatedModule::d_G(const ModuleElement& x) const { return d(x) - partial(x); }

ModuleElement TruncatedModule::P(const ModuleElement& x) const {
  return apply_form(hodge_->codiff_greens_total(), partial(x));
}

ModuleElement TruncatedModule::Q(const ModuleElement& x) const {
  return partial(apply_form(hodge_->codiff_greens_total(), x));
}

namespace {

template <class Step>
ModuleElement neumann(const ModuleElement& x, Step&& step, int bound) {
  ModuleElement sum = x;
  ModuleElement term = x;
  for (int i = 0; i <= bound; ++i) {
    term = step(term);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw Error(ErrorKind::InvalidArgument, "Neumann series failed to terminate under the cap");
}

}  // namespace

ModuleElement TruncatedModule::phi_inverse(const ModuleElement& x) const {
  return neumann(x, [this](const ModuleElement& t) { return P(t); }, cap_ + 1);
}

ModuleElement TruncatedModule::psi_inverse(const ModuleElement& x) const {
  return neumann(x, [this](const ModuleElement& t) { return Q(t); }, cap_ + 1);
}

ModuleElement TruncatedModule::product(const ModuleElement& x, const ModuleElement& y) const {
  if (!datum_->abelian()) throw Error(ErrorKind::NotAbelian, "products are only defined for torus actions");
  const ProductTable* table = datum_->product();
  if (!table) throw Error(ErrorKind::ProductUnavailable, "the datum carries no product");
  ModuleElement out;
  std::size_t dropped = 0;
  for (const auto& [kx, vx] : x.terms()) {
    const RatMatrix& left = table->left_multiplication(kx.second);
    for (const auto& [ky, vy] : y.terms()) {
      const auto mono = times_monomial(kx.first, ky.first);
      left.for_each_in_column(ky.second, [&](std::size_t r, const Rational& v) {
        if (mono)
          out.add({*mono, r}, vx * vy * v);
        else
          ++dropped;
      });
    }
  }
  out.note_dropped(dropped);
  return out;
}

std::string TruncatedModule::format_monomial(std::size_t mono) const {
  const auto& e = monomials_.at(mono).exponents;
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += e.size() == 1 ? "t" : "t" + std::to_string(j + 1);
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string TruncatedModule::format(const ModuleElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, value] : x.terms()) {
    const bool negative = value < 0;
    const Rational mag = abs(value);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    if (monomials_[key.first].weight > 0) out += format_monomial(key.first) + "⊗";
    out += complex().label(key.second);
  }
  return out;
}

// ------------------------------------------------------------ validation

namespace {

std::string column_witness(const GradedComplex& c, const RatMatrix& m) {
  std::set<std::size_t> cols;
  m.for_each([&](std::size_t, std::size_t col, const Rational&) { cols.insert(col); });
  std::string out;
  for (auto col : cols) out += (out.empty() ? "" : ", ") + c.label(col);
  return out;
}

CheckResult matrix_zero(const std::string& name, const GradedComplex& c, const RatMatrix& m) {
  CheckResult r{name, m.is_zero(), c.total_dim(), {}};
  if (!r.passed) r.witness = column_witness(c, m);
  return r;
}

template <class Pred>
CheckResult over_basis(const std::string& name, const TruncatedModule& mod,
                       const std::vector<ModuleElement::Key>& basis, Pred&& ok) {
  CheckResult r{name, true, 0, {}};
  for (const auto& key : basis) {
    ++r.checked;
    if (!ok(mod.basis_element(key))) {
      r.passed = false;
      r.witness = mod.format(mod.basis_element(key));
      break;
    }
  }
  return r;
}

}  // namespace

ValidationReport validate_report(const EquivariantDatum& datum, int cap) {
  ValidationReport rep;
  rep.cap = cap;
  const GradedComplex& c = datum.complex();
  const auto& cons = datum.contractions();
  const RatMatrix& d = c.d_total();

  rep.checks.push_back(matrix_zero("d^2 = 0", c, d * d));
  const bool d_ok = rep.checks.back().passed;

  for (std::size_t j = 0; j < cons.size(); ++j) {
    const auto& i = cons[j].op;
    rep.checks.push_back(matrix_zero("d i_" + std::to_string(j + 1) + " + i_" + std::to_string(j + 1) + " d = 0", c,
                                     d * i + i * d));
  }
  for (std::size_t j = 0; j < cons.size(); ++j)
    for (std::size_t k = j; k < cons.size(); ++k) {
      const auto& a = cons[j].op;
      const auto& b = cons[k].op;
      const std::string name = j == k ? "i_" + std::to_string(j + 1) + "^2 = 0"
                                      : "i_" + std::to_string(j + 1) + " i_" + std::to_string(k + 1) + " + i_" +
                                            std::to_string(k + 1) + " i_" + std::to_string(j + 1) + " = 0";
      rep.checks.push_back(matrix_zero(name, c, j == k ? a * a : a * b + b * a));
    }

  auto shared = std::make_shared<const EquivariantDatum>(datum);
  const TruncatedModule mod(shared, cap);
  const auto all = mod.basis_up_to_weight(cap);
  rep.checks.push_back(
      over_basis("d_G^2 = 0", mod, all, [&](const ModuleElement& x) { return mod.d_G(mod.d_G(x)).is_zero(); }));
  const bool dg_ok = rep.checks.back().passed;
  rep.fatal_ok = d_ok && dg_ok;

  if (rep.fatal_ok) rep.checks.push_back(check_PQ_zero(mod));

  const ProductTable* table = datum.product();
  if (!table) {
    rep.product_note = "no product given";
    return rep;
  }
  const std::size_t n = c.total_dim();
  auto e = [&](std::size_t i) { return unit_vector(n, i); };
  auto sign = [&](std::size_t a) { return c.degree_of(a) % 2 ? Rational(-1) : Rational(1); };
  auto first_failure = [&](const std::string& name, auto&& ok) {
    CheckResult r{name, true, 0, {}};
    for (std::size_t a = 0; a < n && r.passed; ++a)
      for (std::size_t b = 0; b < n && r.passed; ++b) {
        ++r.checked;
        if (!ok(a, b)) {
          r.passed = false;
          r.witness = c.label(a) + ", " + c.label(b);
        }
      }
    return r;
  };

  std::vector<CheckResult> product_checks;
  product_checks.push_back(first_failure("product unit", [&](std::size_t a, std::size_t) {
    return table->multiply(e(table->unit()), e(a)) == e(a) && table->multiply(e(a), e(table->unit())) == e(a);
  }));
  product_checks.push_back(first_failure("product graded commutativity", [&](std::size_t a, std::size_t b) {
    const Rational s = (c.degree_of(a) * c.degree_of(b)) % 2 ? -1 : 1;
    return table->multiply(e(a), e(b)) == s * table->multiply(e(b), e(a));
  }));
  product_checks.push_back(first_failure("product associativity", [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < n; ++x)
      if (table->multiply(table->multiply(e(a), e(b)), e(x)) != table->multiply(e(a), table->multiply(e(b), e(x))))
        return false;
    return true;
  }));
  auto derivation = [&](const std::string& name, const RatMatrix& op) {
    return first_failure(name, [&](std::size_t a, std::size_t b) {
      const RatVector lhs = op * table->multiply(e(a), e(b));
      const RatVector rhs = table->multiply(op * e(a), e(b)) + sign(a) * table->multiply(e(a), op * e(b));
      return lhs == rhs;
    });
  };
  product_checks.push_back(derivation("d is a derivation", d));
  if (datum.abelian())
    for (std::size_t j = 0; j < cons.size(); ++j)
      product_checks.push_back(derivation("i_" + std::to_string(j + 1) + " is a derivation", cons[j].op));

  rep.product_ok = datum.abelian();
  for (auto& r : product_checks) {
    rep.product_ok = rep.product_ok && r.passed;
    rep.checks.push_back(std::move(r));
  }
  if (!datum.abelian())
    rep.product_note = "non-abelian generator degrees; product operations disabled";
  else if (!rep.product_ok)
    rep.product_note = "product axioms failed; product operations disabled";
  return rep;
}

ValidationReport validate(const EquivariantDatum& datum, int cap) {
  ValidationReport rep = validate_report(datum, cap);
  if (rep.fatal_ok) return rep;
  std::string msg;
  for (const auto& r : rep.checks) {
    if (r.passed) continue;
    msg += (msg.empty() ? "" : "; ") + r.name + " fails at " + r.witness;
  }
  throw Error(ErrorKind::InvalidComplex, msg);
}

CheckResult check_PQ_zero(const TruncatedModule& mod) {
  return over_basis("PQ = QP = 0", mod, mod.basis_up_to_weight(mod.cap()), [&](const ModuleElement& x) {
    return mod.P(mod.Q(x)).is_zero() && mod.Q(mod.P(x)).is_zero();
  });
}

}  // namespace hbm
