#pragma once

#include <string_view>

#include "reslat/formula.hpp"

namespace reslat {

/// Parses the concrete formula grammar into `arena`. Binding strength,
/// tightest first: `*`, then `\` and `/` (left-associative), then `&`, then
/// `|`; `forall x ..` / `exists x ..` scope maximally to the right and need
/// parentheses when used as an operand. Atoms are `R(t,..)` or a bare name
/// for arity 0, `t1 = t2`, the unit constant `1`, and truth constants
/// `@<label>`. Identifiers that are not declared constants are variables.
Formula parse(Arena& arena, std::string_view text);

}  // namespace reslat
