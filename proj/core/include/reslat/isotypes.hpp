#pragma once

#include <span>
#include <vector>

#include "reslat/eval.hpp"
#include "reslat/formula.hpp"
#include "reslat/model.hpp"

namespace reslat {

/// The k-isomorphism-type formula of an anchor tuple: a standard-expansion
/// formula over variables v1..v_{s+k} whose satisfaction encodes k-round
/// back-and-forth equivalence against the source tuple.
struct Isotype {
  Formula formula;
  int rank = 0;
  std::vector<int> anchor;
  std::size_t memo_entries = 0;   // distinct (anchor extension, rank) subformulas
  std::size_t nodes_created = 0;  // arena growth while building
};

/// Builds the rank-k type of `anchor` in `m`. The rank-0 base is the
/// conjunction, over every atom in the anchor variables and the object
/// constants, of [atom \ a] and [atom / a] where a is the realized value;
/// equality atoms use the unit for equal pairs and the model's eq_gap
/// otherwise. Rank k takes one extension conjunct per domain element plus
/// the covering disjunction, with subformulas memoized per extension.
/// Throws BudgetExceeded when the arena would grow past node_cap.
Isotype build_isotype(Arena& arena, const Model& m, std::span<const int> anchor, int k,
                      std::size_t node_cap = 2'000'000);

/// Evaluates the type on (the standard expansion of) another model at a
/// candidate anchor and returns the modelling verdict.
bool realizes(const Model& n, std::span<const int> candidate, const Isotype& type, Arena& arena);

}  // namespace reslat
