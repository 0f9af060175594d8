#pragma once

// Line-oriented set-family files:
//
//   # comment
//   n 4
//   1 2
//   2 3 4
//   -          <- the empty set
//
// The first non-comment line is the header `n <N>`; every further line is a
// set of strictly increasing 1-based elements. `#` starts a comment anywhere.

#include <string>
#include <string_view>
#include <vector>

#include "downsets/limits.hpp"
#include "downsets/setfam.hpp"

namespace downsets {

struct ParsedFamily {
  /// Normalized.
  SetFamily family;
  /// Non-fatal notes (duplicate sets removed, ...).
  std::vector<std::string> diagnostics;
};

/// Throws ParseError (with line number), MemberOutOfRange, GroundSetTooLarge.
ParsedFamily parse_family(std::string_view text, const Limits& limits = {});

/// Inverse of parse_family for normalized families.
std::string write_family(const SetFamily& family);

}  // namespace downsets
