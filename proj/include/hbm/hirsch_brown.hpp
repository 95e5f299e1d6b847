#pragma once

#include "hbm/equivariant.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hbm {

/// psi^{-1} d_G psi on the truncated module.
ModuleElement dbar(const TruncatedModule& module, const ModuleElement& x);

/// Transferred differential on 1 (x) h for a harmonic total-space vector h.
///
/// Computed twice: as (I (x) H) dbar(h), and as phi d_G phi^{-1}(h). The two
/// must agree exactly; a disagreement raises Error(TheoremMismatch).
ModuleElement d_hb(const TruncatedModule& module, const RatVector& harmonic);

/// The free R_G-module R_G (x) Harm with the transferred differential, stored
/// by its values on the generators 1 (x) h_j and extended R_G-linearly.
class MinimalModel {
 public:
  const std::vector<HarmonicGenerator>& generators() const { return generators_; }
  /// d_HB(1 (x) h_j).
  const ModuleElement& image(std::size_t j) const { return images_.at(j); }
  bool dhb_is_zero() const { return dhb_is_zero_; }
  int cap() const { return cap_; }
  /// Whether the datum's product passed validation (needed for products).
  bool product_ok() const { return product_ok_; }

  /// d_HB on an element of R_G (x) Harm. Throws Error(InvalidArgument) when
  /// some form part is not harmonic.
  ModuleElement apply(const TruncatedModule& module, const ModuleElement& x) const;

  /// Index of the generator with this label, if any.
  std::optional<std::size_t> find(std::string_view label) const;

 private:
  friend MinimalModel minimal_model(const TruncatedModule& module);

  std::vector<HarmonicGenerator> generators_;
  std::vector<ModuleElement> images_;
  bool dhb_is_zero_ = true;
  bool product_ok_ = false;
  int cap_ = 0;
};

/// Validates the datum at the module's cap (fatal failures throw) and
/// assembles d_HB on every harmonic generator.
MinimalModel minimal_model(const TruncatedModule& module);

/// (monomial, generator) -> coefficient for an element of R_G (x) Harm.
std::map<std::pair<std::size_t, std::size_t>, Rational> harmonic_coordinates(const TruncatedModule& module,
                                                                               const ModuleElement& x);

struct CohomologyTable {
  int window = 0;                 // dims are exact for total degrees 0..window
  std::vector<std::size_t> dims;  // dims[m], m = 0..window
};

CohomologyTable cohomology_minimal(const TruncatedModule& module, const MinimalModel& mm);
CohomologyTable cohomology_cartan(const TruncatedModule& module);

struct IdentityReport {
  int window = 0;  // identities are checked on t-weights 0..window
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Throws Error(IdentityFailed) naming the first failed check and its witness.
void require_passed(const IdentityReport& report);

/// The transfer identities: the projection-section identity
/// (I (x) H) psi^{-1} phi^{-1} i_H = I, the projection chain-map square
/// (I (x) H) psi^{-1} d_G = d_HB (I (x) H) psi^{-1}, and the extension
/// chain-map square d_G phi^{-1} i_H = phi^{-1} i_H d_HB.
IdentityReport homotopy_identities(const TruncatedModule& module, const MinimalModel& mm);

/// dbar restricted to the three Hodge summands: 0 on boundaries, d on
/// coexact forms, -psi^{-1} partial = -partial phi^{-1} on harmonics.
IdentityReport dbar_trichotomy(const TruncatedModule& module);

/// psi d = d_G on R_G (x) E.
CheckResult coexact_square(const TruncatedModule& module);

/// phi d_G phi^{-1}(x) = (I (x) H) d_G phi^{-1}(x) + d x, for arbitrary x.
CheckResult check_perturbed_split(const TruncatedModule& module, const ModuleElement& x);

/// A random element with t-weight inside the operator window.
ModuleElement random_element(const TruncatedModule& module, std::uint64_t seed, std::size_t terms = 3);

/// Every exact operator identity of the construction, including the three
/// reports above, the Neumann-series identities and `random_samples` random
/// instances of check_perturbed_split.
IdentityReport operator_identities(const TruncatedModule& module, const MinimalModel& mm,
                                   std::size_t random_samples = 50, std::uint64_t seed = 1);

/// phi^{-1}(h), verified d_G-closed. Throws Error(NotCEF) unless d_HB = 0.
ModuleElement canonical_extension(const TruncatedModule& module, const MinimalModel& mm, const RatVector& harmonic);

struct TwistedProduct {
  ModuleElement value;             // in R_G (x) Harm
  RatVector form_product_harmonic;  // H(a b)
  bool weight_zero_matches = false;  // weight-0 part of value == H(a b)
};

/// a ~ b = (I (x) H) psi^{-1}(phi^{-1}(a) phi^{-1}(b)) for harmonic a, b.
/// Throws Error(NotAbelian), Error(ProductUnavailable) or Error(NotCEF).
TwistedProduct twisted_product(const TruncatedModule& module, const MinimalModel& mm, const RatVector& a,
                               const RatVector& b);

/// Same formula on arbitrary elements of R_G (x) Harm.
ModuleElement twisted_product(const TruncatedModule& module, const MinimalModel& mm, const ModuleElement& x,
                              const ModuleElement& y);

/// Some y of total degree `degree - 1` with d_G y = target, or nullopt.
std::optional<ModuleElement> solve_dG(const TruncatedModule& module, const ModuleElement& target, int degree);

/// gamma with phi^{-1} i_H(a ~ b) = phi^{-1}(a) phi^{-1}(b) + d_G gamma.
/// Throws Error(NoWitnessInWindow) when no such gamma exists at this cap.
ModuleElement gamma_witness(const TruncatedModule& module, const MinimalModel& mm, const RatVector& a,
                            const RatVector& b);

}  // namespace hbm
