#pragma once

#include "hbm/complex.hpp"

#include <string>
#include <vector>

namespace hbm {

/// Codifferential blocks: result[m] = d*_m : C^m -> C^{m-1}, the adjoint of
/// d_{m-1} under the inner products, inner_{m-1}^{-1} d_{m-1}^T inner_m.
std::vector<RatMatrix> codifferential(const GradedComplex& c);

/// A harmonic basis vector, in total-space coordinates.
struct HarmonicGenerator {
  std::string label;  // the basis label when the vector is a basis element, else h<deg>_<i>
  int degree = 0;
  RatVector vector;
};

/// The Hodge package of a complex: C^m = Harm^m + B^m + E^m with B = im d and
/// E = im d*, pairwise orthogonal. Per-degree data is in local coordinates of
/// C^m; the *_total() matrices act on the total space.
class HodgeData {
 public:
  explicit HodgeData(GradedComplex complex);

  const GradedComplex& complex() const { return complex_; }

  const std::vector<RatVector>& harmonic_basis(int m) const { return harmonic_.at(idx(m)); }
  const std::vector<RatVector>& boundary_basis(int m) const { return boundary_.at(idx(m)); }
  const std::vector<RatVector>& coexact_basis(int m) const { return coexact_.at(idx(m)); }
  const RatMatrix& codifferential(int m) const { return codiff_.at(idx(m)); }
  const RatMatrix& laplacian(int m) const { return laplacian_.at(idx(m)); }
  const RatMatrix& harmonic_projector(int m) const { return projector_.at(idx(m)); }
  const RatMatrix& greens(int m) const { return greens_.at(idx(m)); }

  const RatMatrix& codifferential_total() const { return codiff_total_; }
  const RatMatrix& laplacian_total() const { return laplacian_total_; }
  const RatMatrix& harmonic_total() const { return projector_total_; }
  const RatMatrix& greens_total() const { return greens_total_; }
  /// d* G, the homotopy used by the perturbation operators.
  const RatMatrix& codiff_greens_total() const { return codiff_greens_total_; }

  const std::vector<HarmonicGenerator>& generators() const { return generators_; }
  std::size_t harmonic_dim(int m) const { return harmonic_basis(m).size(); }

  /// Coordinates of a total-space harmonic vector over generators(). Throws
  /// Error(InvalidArgument) when v is not harmonic.
  RatVector harmonic_coordinates(const RatVector& v) const;

 private:
  std::size_t idx(int m) const;

  GradedComplex complex_;
  std::vector<std::vector<RatVector>> harmonic_, boundary_, coexact_;
  std::vector<RatMatrix> codiff_, laplacian_, projector_, greens_;
  RatMatrix codiff_total_, laplacian_total_, projector_total_, greens_total_, codiff_greens_total_;
  std::vector<HarmonicGenerator> generators_;
  RatMatrix coordinate_map_;  // generators x total_dim, a left inverse on harmonics
};

struct Decomposition {
  RatVector harmonic;
  RatVector exact;
  RatVector coexact;
};

/// v = H v + d d* G v + d* d G v for v in C^m (local coordinates).
/// Throws Error(DegreeOutOfRange) when m is not a degree of the complex or v
/// has the wrong length.
Decomposition decompose(const HodgeData& h, int m, const RatVector& v);

}  // namespace hbm
