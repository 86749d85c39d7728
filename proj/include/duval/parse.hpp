#pragma once

#include <string_view>

#include "duval/poly.hpp"

namespace duval {

/// Parses polynomial text into a canonical PolyFp over the given ring.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | VAR ['^' INT] | '(' expr ')' ['^' INT] | '-' factor
///   VAR    := [a-zA-Z][a-zA-Z0-9']*
///
/// Errors carry 1-based line/column positions.
PolyFp parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace duval
