#include "reslat/eval.hpp"

namespace reslat {

Env::Env(Arena& arena, const std::vector<std::pair<std::string, int>>& bindings) {
  for (const auto& [name, elem] : bindings) bind(arena.var(name), elem);
}

void Env::bind(int var_id, int element) {
  if (static_cast<std::size_t>(var_id) >= slots_.size())
    slots_.resize(static_cast<std::size_t>(var_id) + 1, -1);
  slots_[static_cast<std::size_t>(var_id)] = element;
}

void Env::unbind(int var_id) {
  if (static_cast<std::size_t>(var_id) < slots_.size())
    slots_[static_cast<std::size_t>(var_id)] = -1;
}

bool Env::bound(int var_id) const {
  return static_cast<std::size_t>(var_id) < slots_.size() &&
         slots_[static_cast<std::size_t>(var_id)] >= 0;
}

int Env::get(int var_id) const { return slots_[static_cast<std::size_t>(var_id)]; }

std::size_t Evaluator::KeyHash::operator()(
    const std::pair<std::uint32_t, std::vector<int>>& k) const {
  std::size_t h = k.first * 0x9e3779b97f4a7c15ULL;
  for (int v : k.second) h = h * 1099511628211ULL + static_cast<std::size_t>(v + 1);
  return h;
}

Evaluator::Evaluator(const Model& model, const Arena& arena)
    : model_(model), arena_(arena), alg_(model.algebra()) {
  if (!model.sig().extends(arena.sig()))
    throw Error(ErrorCode::SignatureMismatch, "model signature does not cover the formula arena");
  if (!alg_.same_structure(arena.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "model and arena use different algebras");
}

int Evaluator::term_value(const Term& t, const Env& env) const {
  if (t.kind == TermKind::Const) return model_.constant(t.id);
  if (!env.bound(t.id))
    throw Error(ErrorCode::UnboundVariable, "variable '" + arena_.var_name(t.id) + "' is unbound");
  return env.get(t.id);
}

Elem Evaluator::eval(Formula f, Env& env) {
  const auto& fv = arena_.free_vars(f);
  std::pair<std::uint32_t, std::vector<int>> key;
  key.first = f.id;
  key.second.reserve(fv.size());
  for (int v : fv) {
    if (!env.bound(v))
      throw Error(ErrorCode::UnboundVariable, "variable '" + arena_.var_name(v) + "' is unbound");
    key.second.push_back(env.get(v));
  }
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Elem value = compute(f, env);
  memo_.emplace(std::move(key), value);
  return value;
}

Elem Evaluator::compute(Formula f, Env& env) {
  const Node& n = arena_.node(f);
  switch (n.kind) {
    case NodeKind::Atom: {
      std::vector<int> tuple(n.terms.size());
      for (std::size_t i = 0; i < n.terms.size(); ++i) tuple[i] = term_value(n.terms[i], env);
      return model_.value(n.payload, tuple);
    }
    case NodeKind::Eq:
      return term_value(n.terms[0], env) == term_value(n.terms[1], env) ? alg_.unit()
                                                                        : model_.eq_gap();
    case NodeKind::One:
      return alg_.unit();
    case NodeKind::TruthConst:
      return static_cast<Elem>(n.payload);
    case NodeKind::Meet: {
      Elem acc = eval(n.children[0], env);
      for (std::size_t i = 1; i < n.children.size(); ++i)
        acc = alg_.meet(acc, eval(n.children[i], env));
      return acc;
    }
    case NodeKind::Join: {
      Elem acc = eval(n.children[0], env);
      for (std::size_t i = 1; i < n.children.size(); ++i)
        acc = alg_.join(acc, eval(n.children[i], env));
      return acc;
    }
    case NodeKind::Fuse:
      return alg_.fuse(eval(n.children[0], env), eval(n.children[1], env));
    case NodeKind::LRes:
      return alg_.lres(eval(n.children[0], env), eval(n.children[1], env));
    case NodeKind::RRes:
      return alg_.rres(eval(n.children[0], env), eval(n.children[1], env));
    case NodeKind::Forall:
    case NodeKind::Exists: {
      // Finite domain: inf/sup are the iterated lattice meet/join.
      const int v = n.payload;
      const bool was_bound = env.bound(v);
      const int saved = was_bound ? env.get(v) : -1;
      Elem acc = -1;
      for (int d = 0; d < model_.domain_size(); ++d) {
        env.bind(v, d);
        const Elem x = eval(n.children[0], env);
        if (acc < 0)
          acc = x;
        else
          acc = n.kind == NodeKind::Forall ? alg_.meet(acc, x) : alg_.join(acc, x);
      }
      if (was_bound)
        env.bind(v, saved);
      else
        env.unbind(v);
      return acc;
    }
  }
  throw Error(ErrorCode::BadUsage, "unreachable formula kind");
}

Elem Evaluator::eval_closed(Formula f) {
  Env env;
  return eval(f, env);
}

bool Evaluator::models(Formula f, Env& env) { return alg_.designated(eval(f, env)); }

bool Evaluator::models_closed(Formula f) {
  Env env;
  return models(f, env);
}

Elem eval(const Model& m, const Arena& arena, Formula f, Env env) {
  Evaluator e(m, arena);
  return e.eval(f, env);
}

bool models(const Model& m, const Arena& arena, Formula f) {
  Evaluator e(m, arena);
  return e.models_closed(f);
}

}  // namespace reslat
