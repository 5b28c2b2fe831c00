#pragma once

#include <string>
#include <vector>

#include "reslat/formula.hpp"

namespace reslat {

/// Bounds for exhaustive formula enumeration. Connective depth counts every
/// connective and quantifier application (atoms are depth 0), so the number
/// of formulas grows roughly like c^(2^depth); keep the bounds small. The
/// cap is a hard ceiling on the number of enumerated formulas: the call
/// throws BudgetExceeded when the space is larger, unless `truncate` asks
/// for the deterministic prefix instead.
struct EnumOptions {
  int qd_bound = 0;
  int depth_bound = 1;
  std::vector<std::string> vars;
  std::size_t max_count = 20000;
  bool truncate = false;
  bool include_truth_constants = false;
};

/// Exhaustively enumerates base-language formulas over the arena's signature
/// up to the bounds: all atoms over the given variables and the signature
/// constants, closed under binary meet/join, fuse, both residuals, and both
/// quantifiers. Deterministic; output sorted by the structural order.
std::vector<Formula> enumerate_formulas(Arena& arena, const EnumOptions& options);

}  // namespace reslat
