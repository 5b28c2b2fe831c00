#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "reslat/eval.hpp"
#include "reslat/games.hpp"
#include "reslat/harness.hpp"
#include "reslat/isomorphism.hpp"
#include "reslat/parser.hpp"

using namespace reslat;
using namespace reslat::testing;

namespace {

// The one-element pair over the {0,1/2,3/4,1} chain: P(s) = 3/4 versus 1/2.
struct OnePointPair {
  AlgebraPtr chain;
  Model m;
  Model n;
};

OnePointPair one_point_pair() {
  auto chain = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::goedel_n, 4).relabeled({"0", "1/2", "3/4", "1"}));
  Model m = unary_model(chain, {*chain->element_of("3/4")});
  Model n = unary_model(chain, {*chain->element_of("1/2")});
  return {chain, std::move(m), std::move(n)};
}

}  // namespace

TEST_CASE("one-point models evaluate the existential to the stored value") {
  const auto pair = one_point_pair();
  Arena arena(pair.m.sig(), pair.chain);
  const Formula f = parse(arena, "exists x P(x)");
  CHECK(pair.chain->label(eval(pair.m, arena, f)) == "3/4");
  CHECK(pair.chain->label(eval(pair.n, arena, f)) == "1/2");
  CHECK(eval(pair.m, arena, arena.one()) == pair.chain->unit());
}

TEST_CASE("two-point counterexample values") {
  const auto g3 = goedel(3);
  const Elem a = 0, b = 1;
  const Model m = two_point(g3, a, a);
  const Model n = two_point(g3, b, a);
  Arena arena(m.sig(), g3);
  const Formula phi = parse(arena, "forall x forall y (E(x,y) \\ E(y,x))");
  CHECK(eval(m, arena, phi) == g3->unit());
  CHECK(eval(n, arena, phi) == g3->meet(g3->lres(a, b), g3->lres(b, a)));
  CHECK(eval(n, arena, phi) == 0);
  CHECK(models(m, arena, phi));
  CHECK_FALSE(models(n, arena, phi));
}

TEST_CASE("modelling distributes over the lattice connectives") {
  const auto algebra = lukasiewicz(3);
  Arena arena(graph_sig(), algebra);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Elem> vals(9);
    for (auto& v : vals) v = uniform_int(rng, algebra->size());
    const Model m = graph_model(algebra, 3, vals);
    const Formula p = parse(arena, "exists x E(x,x)");
    const Formula q = parse(arena, "forall x exists y E(x,y)");
    Evaluator e(m, arena);
    CHECK(e.models_closed(arena.meet({p, q})) == (e.models_closed(p) && e.models_closed(q)));
    // join needs well-connectedness (chains are)
    CHECK(e.models_closed(arena.join({p, q})) == (e.models_closed(p) || e.models_closed(q)));
    // residual compares values
    CHECK(e.models_closed(arena.lres(p, q)) ==
          algebra->leq(e.eval_closed(p), e.eval_closed(q)));
    CHECK(e.models_closed(arena.rres(p, q)) ==
          algebra->leq(e.eval_closed(q), e.eval_closed(p)));
  }
}

TEST_CASE("join distribution can fail without well-connectedness") {
  // 2x2 Boolean product: a join b = top >= 1 with neither disjunct designated.
  OperationTables t;
  t.labels = {"00", "01", "10", "11"};
  t.unit = 3;
  auto mt = [](int x, int y) { return x & y; };
  auto jn = [](int x, int y) { return x | y; };
  t.meet.resize(16);
  t.join.resize(16);
  t.fuse.resize(16);
  t.lres.resize(16);
  t.rres.resize(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      t.meet[static_cast<std::size_t>(x) * 4 + y] = mt(x, y);
      t.join[static_cast<std::size_t>(x) * 4 + y] = jn(x, y);
      t.fuse[static_cast<std::size_t>(x) * 4 + y] = mt(x, y);
      t.lres[static_cast<std::size_t>(x) * 4 + y] = (~x | y) & 3;  // Boolean implication
      t.rres[static_cast<std::size_t>(x) * 4 + y] = (~y | x) & 3;
    }
  auto square = std::make_shared<ResiduatedLattice>(ResiduatedLattice::validate(t));
  CHECK_FALSE(square->flags().well_connected);

  Arena arena(unary_sig(), square);
  const Model m = unary_model(square, {*square->element_of("01")});
  const Formula phi = parse(arena, "exists x P(x)");
  const Formula psi = parse(arena, "exists x (P(x) \\ @00)");
  Evaluator e(m, arena);
  const Formula disj = arena.join({phi, psi});
  CHECK(e.models_closed(disj));
  CHECK_FALSE(e.models_closed(phi));
  CHECK_FALSE(e.models_closed(psi));
}

TEST_CASE("finite quantifier exchange at the modelling level") {
  const auto algebra = goedel(4);
  Arena arena(graph_sig(), algebra);
  const Formula all = parse(arena, "forall x E(x,x)");
  const Formula some = parse(arena, "exists x E(x,x)");
  const Formula body = parse(arena, "E(x,x)");
  const int xv = *arena.find_var("x");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Elem> vals(16);
    for (auto& v : vals) v = uniform_int(rng, algebra->size());
    const Model m = graph_model(algebra, 4, vals);
    Evaluator e(m, arena);
    bool all_pointwise = true, some_pointwise = false;
    for (int d = 0; d < 4; ++d) {
      Env env;
      env.bind(xv, d);
      const bool holds = e.models(body, env);
      all_pointwise = all_pointwise && holds;
      some_pointwise = some_pointwise || holds;
    }
    CHECK(e.models_closed(all) == all_pointwise);
    CHECK(e.models_closed(some) == some_pointwise);  // needs well-connectedness
  }
}

TEST_CASE("finite chain models are witnessed") {
  const auto algebra = lukasiewicz(4);
  Arena arena(graph_sig(), algebra);
  const Formula body = parse(arena, "E(x,y) \\ E(y,x)");
  const int xv = *arena.find_var("x");
  const int yv = *arena.find_var("y");
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Elem> vals(9);
    for (auto& v : vals) v = uniform_int(rng, algebra->size());
    const Model m = graph_model(algebra, 3, vals);
    Evaluator e(m, arena);
    for (const bool universal : {false, true}) {
      const Formula quant = universal ? arena.forall(yv, body) : arena.exists(yv, body);
      for (int x = 0; x < 3; ++x) {
        Env env;
        env.bind(xv, x);
        const Elem value = e.eval(quant, env);
        bool attained = false;
        for (int y = 0; y < 3 && !attained; ++y) {
          env.bind(yv, y);
          attained = e.eval(body, env) == value;
          env.unbind(yv);
        }
        CHECK(attained);
      }
    }
  }
}

TEST_CASE("standard expansion: identity reduct, inert values, order tests") {
  const auto pair = one_point_pair();
  const Model star = pair.m.standard_expansion();
  CHECK(star.sig().relations().size() == pair.m.sig().relations().size() + 4);
  CHECK(star.reduct(pair.m.sig()).same_interpretation(pair.m));
  CHECK(star.standard_expansion().same_interpretation(star));  // idempotent

  Arena arena(pair.m.sig(), pair.chain);
  for (Elem a = 0; a < pair.chain->size(); ++a)
    CHECK(eval(star, arena, arena.truth_const(a)) == a);
  // evaluation of base formulas is unchanged
  const Formula f = parse(arena, "exists x P(x)");
  CHECK(eval(star, arena, f) == eval(pair.m, arena, f));
}

TEST_CASE("expansion order examples on the one-point model") {
  const auto pair = one_point_pair();
  Arena arena(pair.m.sig(), pair.chain);
  const Model star = pair.m.standard_expansion();
  Env env(arena, {{"x", 0}});
  Evaluator e(star, arena);
  CHECK(e.models(parse(arena, "@3/4 \\ P(x)"), env));
  CHECK(e.models(parse(arena, "P(x) \\ @3/4"), env));
  CHECK_FALSE(e.models(parse(arena, "@1 \\ P(x)"), env));
}

TEST_CASE("isomorphism search: identity, value failure, relabeling recovery") {
  const auto pair = one_point_pair();
  CHECK(find_isomorphism(pair.m, pair.m).has_value());
  CHECK_FALSE(find_isomorphism(pair.m, pair.n).has_value());  // P-values differ

  const auto algebra = lukasiewicz(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Elem> vals(static_cast<std::size_t>(n) * n);
    for (auto& v : vals) v = uniform_int(rng, algebra->size());
    const Model m = graph_model(algebra, n, vals);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Elem> image(vals.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int t[2] = {i, j};
        image[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * n +
              static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = m.value(0, t);
      }
    const Model h = graph_model(algebra, n, image);
    const auto found = find_isomorphism(m, h);
    REQUIRE(found.has_value());
    // the inverse pairing is itself an isomorphism from h back to m
    std::vector<std::pair<int, int>> inverted;
    for (int i = 0; i < n; ++i) inverted.emplace_back((*found)[static_cast<std::size_t>(i)], i);
    CHECK(is_partial_iso(h, m, inverted));
    const auto back = find_isomorphism(h, m);
    REQUIRE(back.has_value());
    for (int i = 0; i < n; ++i) {
      const int t[2] = {i, i};
      const int fwd[2] = {(*found)[static_cast<std::size_t>(i)], (*found)[static_cast<std::size_t>(i)]};
      CHECK(m.value(0, t) == h.value(0, fwd));
    }
  }
}

TEST_CASE("isomorphism with pinned pairs and constants") {
  const auto algebra = goedel(3);
  ModelData d;
  d.algebra = algebra;
  d.sig = Signature({RelationSymbol{"E", 2}}, {"c"});
  d.domain_size = 2;
  d.relations["E"] = {2, 1, 1, 2};
  d.constants["c"] = 0;
  const Model m(d);
  ModelData d2 = d;
  d2.constants["c"] = 1;
  const Model n(std::move(d2));
  // constants must map to each other: 0 -> 1 here, so pinning 0 -> 0 fails
  CHECK(find_isomorphism(m, n).has_value());
  const std::pair<int, int> pin[1] = {{0, 0}};
  CHECK_FALSE(find_isomorphism(m, n, pin).has_value());
}

TEST_CASE("enumeration covers the hand-counted space") {
  Arena arena(unary_sig(), lukasiewicz(3));
  EnumOptions opt;
  opt.qd_bound = 0;
  opt.depth_bound = 1;
  opt.vars = {"x"};
  const auto out = enumerate_formulas(arena, opt);
  // atoms: P(x), x = x, One. depth 1: 3 meets + 3 joins of distinct pairs,
  // 9 fuses, 9 lres, 9 rres.
  CHECK(out.size() == 36);
  const Formula px = parse(arena, "P(x)");
  const Formula xx = parse(arena, "x = x");
  CHECK(std::find(out.begin(), out.end(), px) != out.end());
  CHECK(std::find(out.begin(), out.end(), xx) != out.end());
  CHECK(std::find(out.begin(), out.end(), arena.one()) != out.end());
  for (const Formula f : out) CHECK(arena.qd(f) == 0);
}

TEST_CASE("enumeration bounds and budget") {
  Arena arena(unary_sig(), lukasiewicz(3));
  EnumOptions opt;
  opt.qd_bound = 0;
  opt.depth_bound = 2;
  opt.vars = {"x"};
  opt.max_count = 10;
  CHECK_THROWS_AS(enumerate_formulas(arena, opt), Error);
  opt.truncate = true;
  CHECK(enumerate_formulas(arena, opt).size() == 10);

  EnumOptions quant;
  quant.qd_bound = 1;
  quant.depth_bound = 1;
  quant.vars = {"x"};
  Arena arena2(unary_sig(), lukasiewicz(3));
  for (const Formula f : enumerate_formulas(arena2, quant)) CHECK(arena2.qd(f) <= 1);

  EnumOptions no_quant;
  no_quant.qd_bound = 0;
  no_quant.depth_bound = 2;
  no_quant.vars = {"x"};
  no_quant.truncate = true;
  Arena arena3(unary_sig(), lukasiewicz(3));
  for (const Formula f : enumerate_formulas(arena3, no_quant)) {
    CHECK(arena3.qd(f) == 0);
  }
}

TEST_CASE("eq_gap defaults to bottom and rejects the unit") {
  const auto algebra = lukasiewicz(3);
  const Model m = unary_model(algebra, {1});
  CHECK(m.eq_gap() == *algebra->flags().bot);
  ModelData d;
  d.algebra = algebra;
  d.sig = unary_sig();
  d.domain_size = 1;
  d.relations["P"] = {0};
  d.eq_gap = algebra->unit();
  CHECK_THROWS_AS(Model(std::move(d)), Error);
}
