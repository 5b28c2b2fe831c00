#pragma once

#include <functional>
#include <memory>
#include <string>

#include "reslat/eval.hpp"
#include "reslat/hanf.hpp"
#include "reslat/metric.hpp"

namespace reslat {

/// An isomorphism-closed map from models to tuple sets. A 0-ary query takes
/// the empty tuple and its output set is 1 (holds) or 0 (does not).
struct Query {
  std::string name;
  int arity = 0;
  std::function<bool(const Model&, std::span<const int>)> evaluate;
};

enum class QueryMode { Models, Ge, Gt };

/// The query defined by a formula: tuples (ordered by the formula's sorted
/// free variables) where the value is designated (Models), >= a (Ge), or
/// > a (Gt).
Query definable_query(std::shared_ptr<Arena> arena, Formula f, QueryMode mode, Elem a = -1);

/// 0-ary: is every pair of elements linked by a path of edges valued
/// strictly above bottom? Needs a bounded algebra.
Query bot_connectivity_query();
/// 2-ary: is n reachable from m along directed steps R(x,y) >= t over the
/// binary relation symbols? Reflexive (the empty path counts).
Query transitive_closure_query(Elem t);

struct QueryViolation {
  int trial = 0;
  std::vector<int> left_tuple;
  std::vector<int> right_tuple;
  bool left_in = false;
  bool right_in = false;
  // the certificate's models (for Gaifman locality both point at one model)
  std::shared_ptr<const Model> left_model;
  std::shared_ptr<const Model> right_model;
};

struct QueryLocalityReport {
  int trials = 0;
  int applicable = 0;
  std::vector<QueryViolation> violations;
};

/// Hanf locality test at radius r: over generated pairs whose anchored swap
/// relation holds, flags any disagreement of the query. A violation
/// certifies the query is not Hanf-local at this radius.
QueryLocalityReport test_hanf_local(const Query& q, int r, const PairGenerator& generator,
                                    int trials);

using ModelGenerator = std::function<std::optional<Model>(int trial)>;

/// Gaifman locality test at radius r: within each generated model, for every
/// pair of arity-tuples with pointed-isomorphic r-spheres, flags any
/// disagreement of the query.
QueryLocalityReport test_gaifman_local(const Query& q, int r, const GaifmanMetric& metric,
                                       const ModelGenerator& generator, int trials);

}  // namespace reslat
