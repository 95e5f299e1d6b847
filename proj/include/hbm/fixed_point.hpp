#pragma once

#include "hbm/rational.hpp"
#include "hbm/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hbm {

/// One fixed component of a circle action on CP^n: its moment value, its
/// multiplicity r + 1, and (for isolated points) the equivariant Euler class.
struct FixedComponent {
  Rational value;
  int multiplicity = 1;
  std::optional<Rational> euler;
};

struct FixedPointData {
  int n = 0;
  std::vector<FixedComponent> components;

  /// mu_1..mu_{n+1}: each moment value repeated by its multiplicity.
  std::vector<Rational> expanded() const;

  /// Isolated points from distinct moment values, optionally with Euler classes.
  static FixedPointData isolated(const std::vector<Rational>& mu, const std::vector<Rational>& euler = {});
};

/// Brute-force sum over i-element index subsets.
Rational elementary_symmetric(const std::vector<Rational>& vals, int i);
/// Brute-force sum over degree-j multisets of indices.
Rational complete_homogeneous(const std::vector<Rational>& vals, int j);

/// c_1..c_{n+1} (c[i-1] = c_i) with w^{n+1} = sum c_i w^{n+1-i} t^i.
struct CoefficientVector {
  std::vector<Rational> c;

  const Rational& at(int i) const { return c.at(static_cast<std::size_t>(i - 1)); }
};

/// Expands prod (w - mu_i t). Throws Error(EulerCharacteristicMismatch) when
/// the multiplicities do not sum to n + 1, and Error(IdentityFailed) if some
/// w = mu_j t fails to annihilate the relation.
CoefficientVector coefficients_from_moments(const FixedPointData& data);

/// h_0..h_{j_max} of the expanded moment list, via the generating function
/// prod 1 / (1 - mu_i x).
std::vector<Rational> complete_homogeneous_series(const std::vector<Rational>& mu, int j_max);

/// H(mu^j) = h_j / binom(n + j, j).
Rational moment_average(const FixedPointData& data, int j);

struct MomentPower {
  int j = 0;
  Rational lagrange;  // sum_i mu_i^{n+j} / prod_{k != i} (mu_i - mu_k)
  Rational scaled;    // binom(n + j, j) H(mu^j)
  Rational average;   // H(mu^j)
};

/// Both evaluations for j = 0..j_max. Throws Error(RepeatedMomentValues) when
/// the moment values are not distinct, Error(IdentityFailed) on a mismatch.
std::vector<MomentPower> moment_powers(const FixedPointData& data, int j_max);

/// sum_i mu_i^d / prod_{k != i} (mu_i - mu_k) for distinct mu.
Rational lagrange_sum(const std::vector<Rational>& mu, int d);

/// h_{1+j} = sum_i c_i h_{1+j-i} for 0 <= j <= j_max, plus
/// c_1 = (n+1) H(mu) and c_2 = binom(n+2, 2) H(mu^2) - (n+1)^2 H(mu)^2.
Report recursion_check(const FixedPointData& data, int j_max);

struct VolumeResult {
  std::vector<Rational> values;  // v_i = (1/e_i) prod_{j != i} (mu_i - mu_j)
  Rational volume;
};

/// Common value of the v_i. Throws Error(MissingEuler),
/// Error(RepeatedMomentValues) or Error(InconsistentFixedPointData).
VolumeResult volume_from_data(const FixedPointData& data);

struct WeightedCP2 {
  long a = 0, b = 0;
  Rational s, area;  // area = s^2
  FixedPointData data;
  CoefficientVector coefficients;
  Rational c2_closed, c3_closed, c3_factored;
  Report report;
};

/// The action [z0, z^a z1, z^b z2] with mean-zero moment map scaled by s.
/// Throws Error(InvalidWeights) unless 0 < a < b, Error(InvalidArgument)
/// unless s > 0.
WeightedCP2 cp2_weighted(long a, long b, const Rational& s);

/// "w^3 = 21*w*t^2 + 20*t^3".
std::string relation_string(const CoefficientVector& c);

/// Ring presentation plus every check that applies to the data.
Report relation_report(const FixedPointData& data, int j_max = 8);

}  // namespace hbm
