#pragma once

#include "hbm/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hbm {

using RatVector = std::vector<Rational>;

bool is_zero(const RatVector& v);
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t k);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

/// Sparse exact matrix. Entries are keyed column-major so column sweeps (the
/// hot path when applying operators to sparse module elements) are cheap.
/// Zero entries are never stored.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  /// Calls f(row, value) for every stored entry of column c, in row order.
  template <class F>
  void for_each_in_column(std::size_t c, F&& f) const {
    for (auto it = entries_.lower_bound({c, 0}); it != entries_.end() && it->first.first == c; ++it)
      f(it->first.second, it->second);
  }

  /// Calls f(row, col, value) for every stored entry.
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [key, value] : entries_) f(key.second, key.first, value);
  }

  RatVector column(std::size_t c) const;
  std::vector<RatVector> to_dense() const;
  RatMatrix transpose() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  RatMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  RatVector operator*(const RatVector& v) const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;  // (col, row)
};

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<RatVector> kernel_basis;  // one vector per free column, free entry = 1
  std::vector<RatVector> image_basis;   // the pivot columns of the input
};

/// Reduced row echelon form with the first-nonzero-in-column pivot rule.
RankKernelImage rank_kernel_image(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Some x with m*x = b (free variables set to zero), or nullopt.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Throws Error(InnerNotPositiveDefinite) unless inner is symmetric with all
/// LDL^T pivots strictly positive.
void require_positive_definite(const RatMatrix& inner);

/// Throws Error(InvalidArgument) when m is singular.
RatMatrix inverse(const RatMatrix& m);

/// <u, inner v>.
Rational pairing(const RatVector& u, const RatMatrix& inner, const RatVector& v);

/// Matrix of the inner-orthogonal projection onto span(basis).
RatMatrix orthogonal_projector(const std::vector<RatVector>& basis, const RatMatrix& inner, std::size_t dim);

RatVector orthogonal_project(const std::vector<RatVector>& basis, const RatMatrix& inner, const RatVector& v);

}  // namespace hbm
