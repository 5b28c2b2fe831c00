#include "reslat/isotypes.hpp"

#include <map>

namespace reslat {

namespace {

class IsotypeBuilder {
 public:
  IsotypeBuilder(Arena& arena, const Model& m, std::size_t node_cap)
      : arena_(arena), m_(m), cap_(node_cap), start_nodes_(arena.size()) {}

  Formula build(std::vector<int> anchor, int rank) {
    vars_.clear();
    for (std::size_t i = 0; i < anchor.size() + static_cast<std::size_t>(rank); ++i)
      vars_.push_back(arena_.var("v" + std::to_string(i + 1)));
    return type_of(anchor, rank);
  }

  std::size_t memo_entries() const { return memo_.size(); }
  std::size_t nodes_created() const { return arena_.size() - start_nodes_; }

 private:
  Formula type_of(std::vector<int>& anchor, int rank) {
    auto it = memo_.find({anchor, rank});
    if (it != memo_.end()) return it->second;
    Formula f = rank == 0 ? base(anchor) : step(anchor, rank);
    if (arena_.size() - start_nodes_ > cap_)
      throw Error(ErrorCode::BudgetExceeded, "isotype construction exceeded the node cap");
    memo_.emplace(std::make_pair(anchor, rank), f);
    return f;
  }

  // Terms available at anchor length s: v1..vs plus every object constant,
  // with the elements they denote.
  void collect_terms(const std::vector<int>& anchor, std::vector<Term>& terms,
                     std::vector<int>& elems) const {
    for (std::size_t i = 0; i < anchor.size(); ++i) {
      terms.push_back(Term{TermKind::Var, vars_[i]});
      elems.push_back(anchor[i]);
    }
    for (std::size_t ci = 0; ci < m_.sig().constants().size(); ++ci) {
      terms.push_back(Term{TermKind::Const, static_cast<int>(ci)});
      elems.push_back(m_.constant(static_cast<int>(ci)));
    }
  }

  Formula base(const std::vector<int>& anchor) {
    std::vector<Term> terms;
    std::vector<int> elems;
    collect_terms(anchor, terms, elems);
    const int t = static_cast<int>(terms.size());

    std::vector<Formula> conjuncts;
    for (std::size_t ri = 0; ri < m_.sig().relations().size(); ++ri) {
      const int arity = m_.sig().relations()[ri].arity;
      if (arity > 0 && t == 0) continue;
      std::vector<int> pick(static_cast<std::size_t>(arity), 0);
      for (;;) {
        std::vector<Term> args;
        std::vector<int> tuple;
        for (int p : pick) {
          args.push_back(terms[static_cast<std::size_t>(p)]);
          tuple.push_back(elems[static_cast<std::size_t>(p)]);
        }
        const Elem a = m_.value(static_cast<int>(ri), tuple);
        const Formula atom = arena_.atom(static_cast<int>(ri), std::move(args));
        conjuncts.push_back(arena_.lres(atom, arena_.truth_const(a)));
        conjuncts.push_back(arena_.rres(atom, arena_.truth_const(a)));
        bool more = false;
        for (std::size_t i = pick.size(); i-- > 0;) {
          if (++pick[i] < t) {
            more = true;
            break;
          }
          pick[i] = 0;
        }
        if (!more) break;
      }
    }
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        const Formula eq =
            arena_.eq(terms[static_cast<std::size_t>(i)], terms[static_cast<std::size_t>(j)]);
        const Formula mark = elems[static_cast<std::size_t>(i)] == elems[static_cast<std::size_t>(j)]
                                 ? arena_.one()
                                 : arena_.truth_const(m_.eq_gap());
        conjuncts.push_back(arena_.lres(eq, mark));
        conjuncts.push_back(arena_.rres(eq, mark));
      }
    return arena_.meet(std::move(conjuncts));
  }

  Formula step(std::vector<int>& anchor, int rank) {
    const int next_var = vars_[anchor.size()];
    std::vector<Formula> conjuncts;
    std::vector<Formula> cover;
    for (int d = 0; d < m_.domain_size(); ++d) {
      anchor.push_back(d);
      const Formula sub = type_of(anchor, rank - 1);
      anchor.pop_back();
      conjuncts.push_back(arena_.exists(next_var, sub));
      cover.push_back(sub);
    }
    conjuncts.push_back(arena_.forall(next_var, arena_.join(std::move(cover))));
    return arena_.meet(std::move(conjuncts));
  }

  Arena& arena_;
  const Model& m_;
  std::size_t cap_;
  std::size_t start_nodes_;
  std::vector<int> vars_;
  std::map<std::pair<std::vector<int>, int>, Formula> memo_;
};

}  // namespace

Isotype build_isotype(Arena& arena, const Model& m, std::span<const int> anchor, int k,
                      std::size_t node_cap) {
  if (k < 0) throw Error(ErrorCode::BadUsage, "rank must be non-negative");
  for (int a : anchor)
    if (a < 0 || a >= m.domain_size())
      throw Error(ErrorCode::AnchorOutOfRange, "anchor element outside the domain");
  if (!m.sig().extends(arena.sig()) || !arena.sig().extends(m.sig()))
    throw Error(ErrorCode::SignatureMismatch, "arena signature must match the model");
  if (!m.algebra().same_structure(arena.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "arena algebra must match the model");

  IsotypeBuilder builder(arena, m, node_cap);
  Isotype t;
  t.anchor.assign(anchor.begin(), anchor.end());
  t.rank = k;
  t.formula = builder.build(t.anchor, k);
  t.memo_entries = builder.memo_entries();
  t.nodes_created = builder.nodes_created();
  return t;
}

bool realizes(const Model& n, std::span<const int> candidate, const Isotype& type, Arena& arena) {
  if (candidate.size() != type.anchor.size())
    throw Error(ErrorCode::ArityMismatch, "candidate anchor length differs from the type's");
  Env env;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (candidate[i] < 0 || candidate[i] >= n.domain_size())
      throw Error(ErrorCode::AnchorOutOfRange, "candidate element outside the domain");
    const auto var = arena.find_var("v" + std::to_string(i + 1));
    if (!var) throw Error(ErrorCode::BadUsage, "type variables missing from the arena");
    env.bind(*var, candidate[i]);
  }
  Evaluator e(n, arena);
  return e.models(type.formula, env);
}

}  // namespace reslat
