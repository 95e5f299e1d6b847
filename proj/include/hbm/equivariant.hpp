#pragma once

#include "hbm/complex.hpp"
#include "hbm/hodge.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hbm {

/// Contraction operator i_j paired with the degree of its polynomial generator
/// t_j. As an operator on forms i_j has degree 1 - t_degree.
struct Contraction {
  int t_degree = 2;
  RatMatrix op;  // total-space matrix

  friend bool operator==(const Contraction&, const Contraction&) = default;
};

struct ProductEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t out = 0;
  Rational coeff;

  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

/// Bilinear structure constants on a complex's basis. The first degree-0 basis
/// element is the unit: its products are implied unless listed. A pair listed
/// in one order only is completed by graded commutativity.
class ProductTable {
 public:
  /// Throws Error(InvalidComplex) for entries that break degree additivity.
  /// A pair listed in both orders is kept as given; validate() judges it.
  ProductTable(const GradedComplex& complex, std::vector<ProductEntry> entries);

  /// The entries exactly as given (what gets serialized).
  const std::vector<ProductEntry>& entries() const { return entries_; }
  /// Completed left-multiplication matrices, one per basis element.
  const RatMatrix& left_multiplication(std::size_t basis) const { return left_.at(basis); }
  std::size_t unit() const { return unit_; }

  RatVector multiply(const RatVector& x, const RatVector& y) const;

  friend bool operator==(const ProductTable& a, const ProductTable& b) { return a.left_ == b.left_; }

 private:
  std::vector<ProductEntry> entries_;
  std::vector<RatMatrix> left_;
  std::size_t unit_ = 0;
};

/// Input datum for the (small) Cartan model: forms, contractions and an
/// optional product. Structural checks happen at construction; the algebraic
/// relations (d^2 = 0, d_G^2 = 0, ...) are left to validate().
class EquivariantDatum {
 public:
  EquivariantDatum(GradedComplex complex, std::vector<Contraction> contractions,
                   std::optional<ProductTable> product = std::nullopt, int cap = 10);

  const GradedComplex& complex() const { return complex_; }
  const std::vector<Contraction>& contractions() const { return contractions_; }
  std::size_t rank() const { return contractions_.size(); }
  bool abelian() const;
  int max_t_degree() const;
  const ProductTable* product() const { return product_ ? &*product_ : nullptr; }
  int cap() const { return cap_; }

  friend bool operator==(const EquivariantDatum&, const EquivariantDatum&) = default;

 private:
  GradedComplex complex_;
  std::vector<Contraction> contractions_;
  std::optional<ProductTable> product_;
  int cap_ = 10;
};

/// Element of the truncated module R_G (x) C, stored sparsely as
/// (monomial index, basis index) -> coefficient. `dropped` counts terms
/// discarded because their t-weight exceeded the cap; it is bookkeeping only
/// and does not take part in equality.
class ModuleElement {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  void add(Key key, const Rational& value);
  Rational coefficient(Key key) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t dropped() const { return dropped_; }
  void note_dropped(std::size_t n) { dropped_ += n; }

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Rational& s);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Rational& s, ModuleElement a) { return a *= s; }
  friend ModuleElement operator-(ModuleElement a) { return a *= Rational(-1); }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rational> terms_;
  std::size_t dropped_ = 0;
};

struct Monomial {
  std::vector<int> exponents;
  int weight = 0;
};

/// R_G (x) C truncated at t-weight `cap`, with the Cartan-model operators.
/// Every operator is weight-nondecreasing, so the truncation is a quotient
/// complex and all compositions below are computed exactly in it.
class TruncatedModule {
 public:
  TruncatedModule(std::shared_ptr<const EquivariantDatum> datum, int cap);

  const EquivariantDatum& datum() const { return *datum_; }
  std::shared_ptr<const EquivariantDatum> datum_ptr() const { return datum_; }
  const GradedComplex& complex() const { return datum_->complex(); }
  const HodgeData& hodge() const { return *hodge_; }
  int cap() const { return cap_; }
  /// Largest t-weight at which one more application of the contraction part
  /// stays under the cap.
  int operator_window() const { return cap_ - datum_->max_t_degree(); }

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> monomial_index(const std::vector<int>& exponents) const;
  /// Index of t_j * t^a, or nullopt when it exceeds the cap.
  std::optional<std::size_t> times_generator(std::size_t mono, std::size_t j) const;
  std::optional<std::size_t> times_monomial(std::size_t a, std::size_t b) const;
  int total_degree(ModuleElement::Key key) const;

  /// Basis pairs of total degree m, ordered by (monomial, basis).
  std::vector<ModuleElement::Key> basis_in_degree(int m) const;
  /// Basis pairs whose monomial weight is at most `max_weight`.
  std::vector<ModuleElement::Key> basis_up_to_weight(int max_weight) const;

  ModuleElement basis_element(ModuleElement::Key key) const;
  /// t^a (x) v for a total-space vector v.
  ModuleElement embed(const RatVector& v, std::size_t mono = 0) const;
  /// Form part at monomial `mono`, as a total-space vector.
  RatVector form_part(const ModuleElement& x, std::size_t mono) const;
  /// Only the monomial-0 part.
  RatVector weight_zero_part(const ModuleElement& x) const { return form_part(x, 0); }

  ModuleElement apply_form(const RatMatrix& op, const ModuleElement& x) const;
  ModuleElement multiply_monomial(std::size_t mono, const ModuleElement& x) const;

  ModuleElement d(const ModuleElement& x) const { return apply_form(complex().d_total(), x); }
  ModuleElement partial(const ModuleElement& x) const;
  ModuleElement d_G(const ModuleElement& x) const;
  ModuleElement P(const ModuleElement& x) const;
  ModuleElement Q(const ModuleElement& x) const;
  ModuleElement phi(const ModuleElement& x) const { return x - P(x); }
  ModuleElement psi(const ModuleElement& x) const { return x - Q(x); }
  ModuleElement phi_inverse(const ModuleElement& x) const;
  ModuleElement psi_inverse(const ModuleElement& x) const;
  /// I (x) H.
  ModuleElement harmonic(const ModuleElement& x) const { return apply_form(hodge_->harmonic_total(), x); }

  /// Cartan-model product, the t-bilinear extension of the form product.
  /// Throws Error(NotAbelian) / Error(ProductUnavailable).
  ModuleElement product(const ModuleElement& x, const ModuleElement& y) const;

  /// Matrix of an operator from total degree m to total degree m + shift in
  /// the basis_in_degree() bases.
  template <class Op>
  RatMatrix degree_matrix(int m, int shift, Op&& op) const;

  std::string format(const ModuleElement& x) const;
  std::string format_monomial(std::size_t mono) const;

 private:
  std::shared_ptr<const EquivariantDatum> datum_;
  std::shared_ptr<const HodgeData> hodge_;
  int cap_;
  std::vector<Monomial> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<std::optional<std::size_t>>> times_;  // [mono][j]
};

template <class Op>
RatMatrix TruncatedModule::degree_matrix(int m, int shift, Op&& op) const {
  const auto src = basis_in_degree(m);
  const auto dst = basis_in_degree(m + shift);
  std::map<ModuleElement::Key, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
  RatMatrix out(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const ModuleElement y = op(basis_element(src[c]));
    for (const auto& [key, value] : y.terms()) out.set(row_of.at(key), c, value);
  }
  return out;
}

/// Outcome of a single exact check.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  int cap = 0;
  std::vector<CheckResult> checks;
  bool fatal_ok = true;
  /// False when there is no product, the action is not abelian, or a product
  /// axiom / derivation property failed.
  bool product_ok = false;
  std::string product_note;
};

/// Checks the datum exactly on the module truncated at `cap`. Throws
/// Error(InvalidComplex) when d^2 = 0 or d_G^2 = 0 fails; the message names
/// the offending basis elements of every failed relation.
ValidationReport validate(const EquivariantDatum& datum, int cap);

/// Same checks without throwing.
ValidationReport validate_report(const EquivariantDatum& datum, int cap);

/// P Q = Q P = 0 on every truncated basis element.
CheckResult check_PQ_zero(const TruncatedModule& module);

}  // namespace hbm
