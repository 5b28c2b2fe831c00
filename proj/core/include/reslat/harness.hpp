#pragma once

#include <cstdint>
#include <random>

#include "reslat/hanf.hpp"
#include "reslat/model.hpp"

namespace reslat {

/// Seeded generators backing the property harnesses. Everything is driven by
/// (seed, trial) so a reported violation replays exactly.

/// A uniformly random weighted-graph model (single binary relation "E") with
/// domain size in [min_size, max_size].
Model random_graph_model(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int min_size,
                         int max_size);

/// Premise-true pairs for the Hanf theorem harness: disjoint unions of small
/// random blocks over the algebra, cross-block values pinned to bottom so the
/// strict bottom metric keeps blocks apart. Per block shape the two sides get
/// either equal copy counts or counts that both exceed k * (max block size),
/// then both sides are relabeled by random permutations.
PairSample block_shuffle_pair(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int k);

/// Swap-true pairs for the corollary harness at radius 3^k: a 2m-cycle versus
/// two m-cycles with m > 2*3^k + 1 (unit-weight edges), or an anchored
/// permuted copy of a random block model; the variant alternates per trial.
PairSample swap_pair(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int k);

/// The weighted 2m-cycle: E(i, i+1 mod 2m) = E(i+1 mod 2m, i) = weight,
/// everything else bottom.
Model cycle_model(const AlgebraPtr& algebra, int length, Elem weight);
/// Two disjoint m-cycles in one model.
Model two_cycles_model(const AlgebraPtr& algebra, int m, Elem weight);
/// The directed threshold chain: E(i, i+1) = on_value, everything else
/// off_value.
Model directed_chain_model(const AlgebraPtr& algebra, int length, Elem on_value, Elem off_value);

/// Uniform random element of [0, n).
int uniform_int(std::mt19937_64& rng, int n);

}  // namespace reslat
