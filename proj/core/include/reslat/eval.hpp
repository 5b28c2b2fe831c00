#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reslat/formula.hpp"
#include "reslat/model.hpp"

namespace reslat {

/// Partial map from arena variables to domain elements.
class Env {
 public:
  Env() = default;
  Env(Arena& arena, const std::vector<std::pair<std::string, int>>& bindings);

  void bind(int var_id, int element);
  void unbind(int var_id);
  bool bound(int var_id) const;
  int get(int var_id) const;

 private:
  std::vector<int> slots_;  // -1 = unbound
};

/// Evaluates formulas on one model. The memo table keys on
/// (node, environment restricted to the node's free variables) and persists
/// across calls, so distance tables and isotype subformulas are computed
/// once per model. Pure; one instance per (model, arena) pair.
class Evaluator {
 public:
  Evaluator(const Model& model, const Arena& arena);

  Elem eval(Formula f, Env& env);
  Elem eval_closed(Formula f);
  /// The modelling relation: value >= unit.
  bool models(Formula f, Env& env);
  bool models_closed(Formula f);

  const Model& model() const { return model_; }

 private:
  Elem compute(Formula f, Env& env);
  int term_value(const Term& t, const Env& env) const;

  const Model& model_;
  const Arena& arena_;
  const ResiduatedLattice& alg_;
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint32_t, std::vector<int>>& k) const;
  };
  std::unordered_map<std::pair<std::uint32_t, std::vector<int>>, Elem, KeyHash> memo_;
};

/// One-shot helpers.
Elem eval(const Model& m, const Arena& arena, Formula f, Env env = {});
/// True iff ||f||^M >= 1. The sentence must be closed.
bool models(const Model& m, const Arena& arena, Formula f);

}  // namespace reslat
