#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "reslat/model.hpp"

namespace reslat {

/// Complete backtracking search for a bijection preserving every relation
/// value exactly and every constant, extending the pinned pairs. Candidate
/// targets are pruned by per-element value multisets before search. Returns
/// the mapping (m-index -> n-index) or nullopt.
std::optional<std::vector<int>> find_isomorphism(
    const Model& m, const Model& n,
    std::span<const std::pair<int, int>> pinned = {});

}  // namespace reslat
