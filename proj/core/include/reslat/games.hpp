#pragma once

#include <span>
#include <utility>
#include <vector>

#include "reslat/model.hpp"

namespace reslat {

/// Checks that the listed pairs form a partial isomorphism: a well-defined
/// injective map, every constant's interpretations paired, and every relation
/// value preserved exactly on tuples within the domain (arity-0 relations are
/// always within the domain).
bool is_partial_iso(const Model& m, const Model& n,
                    std::span<const std::pair<int, int>> pairs);

struct GameResult {
  bool equivalent = false;
  int k = 0;
  /// When tracing: trace[j] lists the partial isomorphisms of level
  /// rounds-remaining = j, i.e. the sets I_j of a witnessing back-and-forth
  /// system (anchor extensions up to length |anchor| + (k - j)).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> trace;
};

/// Decides whether a back-and-forth sequence <I_j>_{j<=k} with the anchor in
/// I_k exists, by memoized recursion: a pair list is good for j rounds iff it
/// is a partial isomorphism and every one-element extension demand on either
/// side can be answered for j-1 rounds. Constants are injected into the
/// anchor before play. Domain elements are explored in index order with
/// first-success short-circuiting.
GameResult k_equivalent(const Model& m, const Model& n, int k,
                        std::span<const std::pair<int, int>> anchor = {},
                        bool build_trace = false);

}  // namespace reslat
