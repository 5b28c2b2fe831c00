#pragma once

#include <memory>
#include <random>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/formula.hpp"
#include "reslat/model.hpp"

namespace reslat::testing {

inline AlgebraPtr make_algebra(BuiltinAlgebra which, int n) {
  return std::make_shared<ResiduatedLattice>(ResiduatedLattice::builtin(which, n));
}

inline AlgebraPtr lukasiewicz(int n) { return make_algebra(BuiltinAlgebra::lukasiewicz_n, n); }
inline AlgebraPtr goedel(int n) { return make_algebra(BuiltinAlgebra::goedel_n, n); }
inline AlgebraPtr boolean2() { return make_algebra(BuiltinAlgebra::boolean2, 2); }

inline Signature graph_sig() { return Signature({RelationSymbol{"E", 2}}, {}); }
inline Signature unary_sig() { return Signature({RelationSymbol{"P", 1}}, {}); }

/// Weighted graph on n vertices from a flat row-major value list.
inline Model graph_model(const AlgebraPtr& algebra, int n, std::vector<Elem> e) {
  ModelData d;
  d.algebra = algebra;
  d.sig = graph_sig();
  d.domain_size = n;
  d.relations["E"] = std::move(e);
  return Model(std::move(d));
}

inline Model unary_model(const AlgebraPtr& algebra, std::vector<Elem> p) {
  ModelData d;
  d.algebra = algebra;
  d.sig = unary_sig();
  d.domain_size = static_cast<int>(p.size());
  d.relations["P"] = std::move(p);
  return Model(std::move(d));
}

/// The two-point pair with unit loops and off-diagonal values (st, ts).
inline Model two_point(const AlgebraPtr& a, Elem st, Elem ts) {
  return graph_model(a, 2, {a->unit(), st, ts, a->unit()});
}

/// A flat 5-element Heyting algebra (0 < a,b < c < 1): well-connected but not
/// a chain. Fuse is meet; residuation is the relative pseudo-complement.
inline AlgebraPtr diamond5() {
  const int n = 5;  // 0:bot 1:a 2:b 3:c 4:top(unit)
  auto leq = [](int x, int y) {
    return x == y || x == 0 || y == 4 || ((x == 1 || x == 2) && y == 3);
  };
  OperationTables t;
  t.labels = {"0", "a", "b", "c", "1"};
  t.unit = 4;
  t.meet.resize(25);
  t.join.resize(25);
  t.fuse.resize(25);
  t.lres.resize(25);
  t.rres.resize(25);
  auto meet_of = [&](int x, int y) {
    int mt = 0;
    for (int z = 0; z < n; ++z)
      if (leq(z, x) && leq(z, y) && leq(mt, z)) mt = z;
    return mt;
  };
  auto res_of = [&](int x, int y) {  // greatest z with z meet x <= y
    auto candidate = [&](int z) { return leq(meet_of(z, x), y); };
    for (int z = 0; z < n; ++z) {
      if (!candidate(z)) continue;
      bool greatest = true;
      for (int w = 0; w < n; ++w)
        if (candidate(w) && !leq(w, z)) {
          greatest = false;
          break;
        }
      if (greatest) return z;
    }
    return -1;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int jn = 4;
      for (int z = 0; z < n; ++z)
        if (leq(x, z) && leq(y, z) && leq(z, jn)) jn = z;
      t.meet[static_cast<std::size_t>(x) * n + y] = meet_of(x, y);
      t.join[static_cast<std::size_t>(x) * n + y] = jn;
      t.fuse[static_cast<std::size_t>(x) * n + y] = meet_of(x, y);
      t.lres[static_cast<std::size_t>(x) * n + y] = res_of(x, y);
      t.rres[static_cast<std::size_t>(x) * n + y] = res_of(y, x);
    }
  return std::make_shared<ResiduatedLattice>(ResiduatedLattice::validate(std::move(t)));
}

/// Uniformly random formula tree for round-trip and shift-law tests.
inline Formula random_formula(Arena& arena, std::mt19937_64& rng, int depth,
                              const std::vector<std::string>& vars) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto term = [&]() -> Term {
    const int ccount = static_cast<int>(arena.sig().constants().size());
    const int vcount = static_cast<int>(vars.size());
    const int total = ccount + vcount;
    const int i = pick(total);
    if (i < vcount) return arena.v(vars[static_cast<std::size_t>(i)]);
    return Term{TermKind::Const, i - vcount};
  };
  if (depth == 0) {
    switch (pick(4)) {
      case 0: {
        const int ri = pick(static_cast<int>(arena.sig().relations().size()));
        std::vector<Term> args;
        for (int i = 0; i < arena.sig().relation(ri).arity; ++i) args.push_back(term());
        return arena.atom(ri, std::move(args));
      }
      case 1: return arena.eq(term(), term());
      case 2: return arena.one();
      default: return arena.truth_const(pick(arena.algebra().size()));
    }
  }
  switch (pick(7)) {
    case 0: return arena.meet({random_formula(arena, rng, depth - 1, vars),
                               random_formula(arena, rng, depth - 1, vars)});
    case 1: return arena.join({random_formula(arena, rng, depth - 1, vars),
                               random_formula(arena, rng, depth - 1, vars)});
    case 2: return arena.fuse(random_formula(arena, rng, depth - 1, vars),
                              random_formula(arena, rng, depth - 1, vars));
    case 3: return arena.lres(random_formula(arena, rng, depth - 1, vars),
                              random_formula(arena, rng, depth - 1, vars));
    case 4: return arena.rres(random_formula(arena, rng, depth - 1, vars),
                              random_formula(arena, rng, depth - 1, vars));
    case 5: return arena.forall(arena.var(vars[static_cast<std::size_t>(pick(static_cast<int>(vars.size())))]),
                                random_formula(arena, rng, depth - 1, vars));
    default: return arena.exists(arena.var(vars[static_cast<std::size_t>(pick(static_cast<int>(vars.size())))]),
                                 random_formula(arena, rng, depth - 1, vars));
  }
}

/// All models of the signature {P^1} with domain sizes 1..max_size.
inline std::vector<Model> all_unary_models(const AlgebraPtr& algebra, int max_size) {
  std::vector<Model> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<Elem> vals(static_cast<std::size_t>(n), 0);
    for (;;) {
      out.push_back(unary_model(algebra, vals));
      std::size_t i = vals.size();
      for (; i-- > 0;) {
        if (++vals[i] < algebra->size()) break;
        vals[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

/// All weighted-graph models with domain sizes 1..max_size (3^(n^2) per size
/// over a 3-element algebra; keep max_size <= 2 for exhaustive sweeps).
inline std::vector<Model> all_graph_models(const AlgebraPtr& algebra, int max_size) {
  std::vector<Model> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<Elem> vals(static_cast<std::size_t>(n) * n, 0);
    for (;;) {
      out.push_back(graph_model(algebra, n, vals));
      std::size_t i = vals.size();
      for (; i-- > 0;) {
        if (++vals[i] < algebra->size()) break;
        vals[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

}  // namespace reslat::testing
