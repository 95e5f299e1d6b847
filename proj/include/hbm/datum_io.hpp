#pragma once

#include "hbm/equivariant.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace hbm {

/// Reads a complex-datum document (YAML; JSON is accepted as a subset).
///
/// Top-level keys: degrees, differential, inner, contractions, product, cap.
/// Coefficients are strings "p" or "p/q". Unknown keys, malformed rationals
/// and dangling labels raise Error(ParseError) naming the line and key. The
/// datum is then validated at its own cap; fatal failures raise
/// Error(InvalidComplex).
EquivariantDatum parse_datum(std::string_view text, std::string_view source = "<string>");

/// Same as parse_datum but skips validate(); structural errors still throw.
EquivariantDatum parse_datum_unchecked(std::string_view text, std::string_view source = "<string>");

EquivariantDatum load_datum(const std::filesystem::path& path);

/// Inverse of parse_datum: parse_datum(serialize_datum(x)) == x.
std::string serialize_datum(const EquivariantDatum& datum);

}  // namespace hbm
