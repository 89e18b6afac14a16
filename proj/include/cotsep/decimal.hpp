#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace cotsep {

/// Canonicalizes a decimal number string for exact comparison.
///
/// Accepts an optional sign, a "$" prefix, thousands commas, and a bare
/// trailing "." ("72." == "72"). The canonical form has no sign for zero, no
/// leading integer zeros and no trailing fraction zeros, so "39.0", "039"
/// and "39" all map to "39". Returns nullopt when the input is not a number.
std::optional<std::string> decimal_canonicalize(std::string_view raw);

/// Exact numeric equality on decimal strings (no binary floating point).
bool decimal_equal(std::string_view a, std::string_view b);

}  // namespace cotsep
