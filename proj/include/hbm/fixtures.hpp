#pragma once

#include "hbm/equivariant.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hbm {

/// The six curated data shipped with the library:
/// poly-rot-2, free-rotation, two-torus-rotation, su2-free, trivial-action,
/// sphere-rotation.
const std::vector<std::string>& fixture_names();

/// Deliberately invalid data kept for negative controls (broken-cartan).
const std::vector<std::string>& negative_fixture_names();

/// Embedded YAML source of a fixture. Throws Error(InvalidArgument) for an
/// unknown name.
std::string_view fixture_text(std::string_view name);

/// Parsed fixture, not validated (so negative controls load too).
EquivariantDatum fixture(std::string_view name);

std::string fixture_description(std::string_view name);

/// C + C' with block-diagonal operators. Both data must use the same list of
/// generator degrees. The product is dropped.
EquivariantDatum direct_sum(const EquivariantDatum& a, const EquivariantDatum& b);

/// C (x) C' with the Koszul-signed differential, for the product group: the
/// generators of a come first, then those of b. Products are tensored when
/// both data carry one.
EquivariantDatum tensor(const EquivariantDatum& a, const EquivariantDatum& b);

/// Simultaneous change of basis by a random unimodular matrix per degree.
/// Inner products transform by congruence. The unit of a product stays the
/// first degree-0 basis element.
EquivariantDatum conjugate(const EquivariantDatum& a, std::uint64_t seed);

/// Deterministic family of valid variants built from the curated fixtures by
/// conjugation, direct sums and tensor products.
std::vector<std::pair<std::string, EquivariantDatum>> fixture_variants();

}  // namespace hbm
