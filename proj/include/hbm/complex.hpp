#pragma once

#include "hbm/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbm {

/// Finite-dimensional cochain complex over Q with an inner product on each
/// degree. Degrees run 0..top_degree(); a degree may be zero-dimensional.
///
/// Operators are held as block-structured matrices on the total space
/// C = C^0 + ... + C^top, with basis elements ordered by degree. Basis labels
/// are unique across the whole complex, so a label alone names an element.
class GradedComplex {
 public:
  GradedComplex() = default;

  /// labels[m] lists the basis of C^m. `differential` is a total-space matrix
  /// whose nonzero entries go from degree m to degree m+1; `inner` is
  /// block-diagonal, one symmetric positive-definite block per degree.
  /// Throws Error(InvalidComplex) on shape or block-structure violations and
  /// Error(InnerNotPositiveDefinite) for a bad inner block. d^2 = 0 is *not*
  /// checked here; see validate().
  GradedComplex(std::vector<std::vector<std::string>> labels, RatMatrix differential, RatMatrix inner);

  /// Same with identity inner products.
  GradedComplex(std::vector<std::vector<std::string>> labels, RatMatrix differential);

  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
  std::size_t dim(int m) const;
  std::size_t total_dim() const { return degree_of_.size(); }
  std::size_t offset(int m) const;
  int degree_of(std::size_t index) const { return degree_of_.at(index); }
  const std::string& label(std::size_t index) const { return flat_labels_.at(index); }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  const RatMatrix& d_total() const { return d_; }
  const RatMatrix& inner_total() const { return inner_; }

  /// d_m : C^m -> C^{m+1}; an empty-shaped matrix outside 0..top.
  RatMatrix d(int m) const;
  RatMatrix inner(int m) const;

  /// Sub-block of a total-space matrix mapping C^from -> C^to.
  RatMatrix block(const RatMatrix& total, int from, int to) const;

  /// Total-space vector from a vector in C^m.
  RatVector embed(int m, const RatVector& local) const;
  RatVector restrict(int m, const RatVector& total) const;

  /// True when every nonzero entry of `op` maps degree m to degree m + shift.
  bool has_degree(const RatMatrix& op, int shift) const;

  friend bool operator==(const GradedComplex& a, const GradedComplex& b) {
    return a.labels_ == b.labels_ && a.d_ == b.d_ && a.inner_ == b.inner_;
  }

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::string> flat_labels_;
  std::vector<int> degree_of_;
  std::vector<std::size_t> offsets_;
  RatMatrix d_;
  RatMatrix inner_;
};

}  // namespace hbm
