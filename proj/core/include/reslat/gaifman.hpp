#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reslat/eval.hpp"
#include "reslat/formula.hpp"
#include "reslat/isotypes.hpp"
#include "reslat/metric.hpp"

namespace reslat {

/// The inductive distance formula: theta_0(x,y) := x = y; theta_1 is the
/// disjunction, over relation symbols of positive arity, of an existentially
/// closed adjacency pattern; theta_{r+1}(x,y) := exists z (theta_r(x,z) &
/// theta_1(z,y)). Literal reading of adjacency: position pairs in theta_1 include
/// i = j, so theta_1(x,x) sees every tuple containing x.
Formula theta(Arena& arena, int r, Term x, Term y);

/// Builders for the near/far distance formulas of one metric over a chain
/// with co-atom. The verdict contract, for models whose eq_gap is not
/// designated: ||near_r(a,b)|| is designated iff d(a,b) <= r, and far is its
/// co-atom complement. The threshold variants keep the equality case as a
/// separate crisp disjunct so the extreme thresholds (>= bottom, > top)
/// still decide r = 0 correctly.
class DistanceEncoding {
 public:
  DistanceEncoding(const ResiduatedLattice& algebra, GaifmanMetric metric);

  const GaifmanMetric& metric() const { return metric_; }
  Elem co_atom() const { return co_atom_; }
  /// Co-atom negation: tau(f) = f \ c. At the modelling level, a standard
  /// expansion satisfies f exactly when it does not satisfy tau(f).
  Formula negate(Arena& arena, Formula f) const;

  /// Single-pair builders.
  Formula near(Arena& arena, int r, Term a, Term b) const;
  Formula far(Arena& arena, int r, Term a, Term b) const;

  /// Tuple builders: nearness to any anchor component or to any interpreted
  /// constant (the common core); farness from all of them.
  Formula near_tuple(Arena& arena, int r, std::span<const Term> anchors, Term z) const;
  Formula far_tuple(Arena& arena, int r, std::span<const Term> anchors, Term z) const;

  bool needs_truth_constants() const { return true; }  // tau uses @co_atom

 private:
  GaifmanMetric metric_;
  Elem co_atom_;
};

/// Quantifier prefix extraction via the shift rules: meet, join and fuse are
/// monotone in every position, l\r is antitone in l and monotone in r, l/r
/// monotone in l and antitone in r; hoisting through an antitone position
/// flips the quantifier. Value-preserving on witnessed models, hence on all
/// finite models over chains. Bound variables are renamed fresh.
Formula prenex(Arena& arena, Formula f);

/// Relativization to the radius-r neighborhood of the anchor variables:
/// prenex first, then bound every prefix quantifier with the near/far
/// formulas; the quantifier-free matrix is untouched.
Formula relativize(Arena& arena, Formula f, int r, std::span<const Term> anchor_vars,
                   const DistanceEncoding& enc);

/// The basic local sentence with n scatter points: fresh x_1..x_n, pairwise
/// far at 2r, each satisfying the relativized psi at radius r. psi must have
/// exactly one free variable.
Formula basic_local_sentence(Arena& arena, Formula psi, int r, int n_scatter,
                             const DistanceEncoding& enc);

struct DistinguishResult {
  std::optional<Formula> sentence;
  bool left_models = false;
  bool right_models = false;
  int scatter = 0;
  int source_model = 0;  // 0 = left, 1 = right
  int source_element = 0;
};

/// Searches for a basic local sentence separating the standard expansions,
/// following the scattered-set construction from the Gaifman-lemma proof:
/// candidate local formulas are rank-q isotypes of r-spheres of single
/// elements, scattered 2..scatter_max points apart. Sound (any hit is
/// re-checkable by eval), deliberately not complete.
DistinguishResult distinguish(Arena& arena, const Model& m, const Model& n,
                              const GaifmanMetric& metric, int r, int q, int scatter_max,
                              std::size_t node_cap = 2'000'000);

}  // namespace reslat
