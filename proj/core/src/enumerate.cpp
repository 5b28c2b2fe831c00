#include "reslat/enumerate.hpp"

#include <algorithm>
#include <set>

namespace reslat {

std::vector<Formula> enumerate_formulas(Arena& arena, const EnumOptions& opt) {
  struct Entry {
    Formula f;
    int depth;
  };
  std::vector<Entry> all;
  std::set<std::uint32_t> seen;
  bool truncated = false;

  auto add = [&](Formula f, int depth) {
    if (truncated) return false;
    if (arena.qd(f) > opt.qd_bound) return true;
    if (!seen.insert(f.id).second) return true;
    if (all.size() >= opt.max_count) {
      if (!opt.truncate)
        throw Error(ErrorCode::BudgetExceeded,
                    "enumeration exceeds max_count = " + std::to_string(opt.max_count));
      truncated = true;
      return false;
    }
    all.push_back({f, depth});
    return true;
  };

  std::vector<Term> terms;
  for (const auto& v : opt.vars) terms.push_back(arena.v(v));
  for (std::size_t i = 0; i < arena.sig().constants().size(); ++i)
    terms.push_back(Term{TermKind::Const, static_cast<int>(i)});

  auto advance_pick = [](std::vector<int>& pick, int limit) {
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < limit) return true;
      pick[i] = 0;
    }
    return false;
  };

  // depth 0: atoms
  add(arena.one(), 0);
  for (std::size_t ri = 0; ri < arena.sig().relations().size() && !truncated; ++ri) {
    const int arity = arena.sig().relations()[ri].arity;
    std::vector<int> pick(static_cast<std::size_t>(arity), 0);
    const int t = static_cast<int>(terms.size());
    if (arity > 0 && t == 0) continue;
    do {
      std::vector<Term> args;
      args.reserve(static_cast<std::size_t>(arity));
      for (int p : pick) args.push_back(terms[static_cast<std::size_t>(p)]);
      if (!add(arena.atom(static_cast<int>(ri), std::move(args)), 0)) break;
    } while (advance_pick(pick, t));
  }
  for (std::size_t i = 0; i < terms.size() && !truncated; ++i)
    for (std::size_t j = 0; j < terms.size() && !truncated; ++j)
      add(arena.eq(terms[i], terms[j]), 0);
  if (opt.include_truth_constants)
    for (Elem a = 0; a < arena.algebra().size() && !truncated; ++a)
      add(arena.truth_const(a), 0);

  for (int depth = 1; depth <= opt.depth_bound && !truncated; ++depth) {
    const std::size_t frontier = all.size();
    // binary connectives over everything built so far, with at least one
    // operand from the previous depth
    for (std::size_t i = 0; i < frontier && !truncated; ++i)
      for (std::size_t j = 0; j < frontier && !truncated; ++j) {
        if (std::max(all[i].depth, all[j].depth) != depth - 1) continue;
        const Formula a = all[i].f;
        const Formula b = all[j].f;
        if (i <= j) {
          add(arena.meet({a, b}), depth);
          add(arena.join({a, b}), depth);
        }
        add(arena.fuse(a, b), depth);
        add(arena.lres(a, b), depth);
        add(arena.rres(a, b), depth);
      }
    for (std::size_t i = 0; i < frontier && !truncated; ++i) {
      if (all[i].depth != depth - 1) continue;
      if (arena.qd(all[i].f) >= opt.qd_bound) continue;
      for (const auto& v : opt.vars) {
        const int var = arena.var(v);
        add(arena.forall(var, all[i].f), depth);
        add(arena.exists(var, all[i].f), depth);
      }
    }
  }

  std::vector<Formula> out;
  out.reserve(all.size());
  for (const Entry& e : all) out.push_back(e.f);
  std::sort(out.begin(), out.end(),
            [&](Formula a, Formula b) { return arena.compare(a, b) < 0; });
  return out;
}

}  // namespace reslat
