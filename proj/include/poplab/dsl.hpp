#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "poplab/pattern.hpp"

namespace poplab {

// Text notation for patterns:
//
//   pattern := '['? segment (sep segment)* ']'?
//   sep     := '-' (free gap) | '~' (gap of at least one letter)
//   segment := letter+            consecutive letters are adjacent
//   letter  := [A-Za-z0-9] '\''*
//
// Whitespace is ignored. Without a poset, a pattern whose letters are all
// unprimed digits is read as a classical pattern ordered by digit value.

PopPattern parse_pattern(std::string_view text, const std::optional<Poset>& poset = std::nullopt);

/// Canonical text; parse_pattern(print_pattern(p), p.poset()) == p. Throws if a
/// letter is not expressible in the notation (longer labels need JSON).
std::string print_pattern(const PopPattern& p);

bool is_notation_letter(const std::string& label);

}  // namespace poplab
