#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "reslat/games.hpp"
#include "reslat/harness.hpp"
#include "reslat/isotypes.hpp"
#include "reslat/parser.hpp"

using namespace reslat;
using namespace reslat::testing;

TEST_CASE("isotype formulas: rank equals quantifier depth, self-satisfaction") {
  const auto algebra = lukasiewicz(3);
  for (int trial = 0; trial < 8; ++trial) {
    const Model m = random_graph_model(algebra, 41, trial, 2, 3);
    Arena arena(m.sig(), algebra);
    for (int k = 0; k <= 2; ++k)
      for (int a = 0; a < m.domain_size(); ++a) {
        const std::vector<int> anchor{a};
        const Isotype t = build_isotype(arena, m, anchor, k);
        CHECK(arena.qd(t.formula) == k);
        CHECK(realizes(m, anchor, t, arena));
        CHECK(arena.is_star_formula(t.formula));
      }
  }
}

TEST_CASE("the one-point pair does not realize each other's rank-0 type") {
  auto chain = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::goedel_n, 4).relabeled({"0", "1/2", "3/4", "1"}));
  const Model m = unary_model(chain, {*chain->element_of("3/4")});
  const Model n = unary_model(chain, {*chain->element_of("1/2")});
  Arena arena(m.sig(), chain);
  const std::vector<int> s{0};
  const Isotype t = build_isotype(arena, m, s, 0);
  CHECK(realizes(m, s, t, arena));
  CHECK_FALSE(realizes(n, s, t, arena));
}

TEST_CASE("rank 0 realization is exactly the partial isomorphism test") {
  const auto algebra = goedel(3);
  const auto models = all_graph_models(algebra, 2);  // exhaustive over <= 2 elements
  for (const Model& m : models)
    for (const Model& n : models) {
      Arena arena(m.sig(), algebra);
      for (int a = 0; a < m.domain_size(); ++a)
        for (int b = 0; b < n.domain_size(); ++b) {
          const std::vector<int> am{a};
          const std::vector<int> bn{b};
          const Isotype t = build_isotype(arena, m, am, 0);
          const std::pair<int, int> map1[1] = {{a, b}};
          CHECK(realizes(n, bn, t, arena) == is_partial_iso(m, n, map1));
        }
    }
}

TEST_CASE("rank 0 same-type symmetry") {
  const auto algebra = lukasiewicz(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Model m = random_graph_model(algebra, 43, 2 * trial, 2, 3);
    const Model n = random_graph_model(algebra, 43, 2 * trial + 1, 2, 3);
    Arena arena(m.sig(), algebra);
    for (int a = 0; a < m.domain_size(); ++a)
      for (int b = 0; b < n.domain_size(); ++b) {
        const std::vector<int> am{a}, bn{b};
        const Isotype tm = build_isotype(arena, m, am, 0);
        const Isotype tn = build_isotype(arena, n, bn, 0);
        CHECK(realizes(n, bn, tm, arena) == realizes(m, am, tn, arena));
      }
  }
}

TEST_CASE("triangle: realizes iff k-round equivalence (two-element exhaustive, k <= 2)") {
  for (const auto& algebra : {goedel(3), boolean2()}) {
    const auto models = all_graph_models(algebra, 2);
    for (const Model& m : models)
      for (const Model& n : models) {
        Arena arena(m.sig(), algebra);
        for (int k = 0; k <= 2; ++k)
          for (int a = 0; a < m.domain_size(); ++a)
            for (int b = 0; b < n.domain_size(); ++b) {
              const std::vector<int> am{a}, bn{b};
              const std::pair<int, int> anchor[1] = {{a, b}};
              const Isotype t = build_isotype(arena, m, am, k);
              CHECK(realizes(n, bn, t, arena) == k_equivalent(m, n, k, anchor).equivalent);
            }
      }
  }
}

TEST_CASE("equality conjuncts pin anchors together and apart") {
  const auto algebra = lukasiewicz(3);
  const Model m = two_point(algebra, 1, 1);
  Arena arena(m.sig(), algebra);
  // duplicated anchor realizes only duplicated candidates
  const std::vector<int> same{0, 0};
  const Isotype t_same = build_isotype(arena, m, same, 0);
  CHECK(realizes(m, same, t_same, arena));
  CHECK_FALSE(realizes(m, std::vector<int>{0, 1}, t_same, arena));
  const std::vector<int> diff{0, 1};
  const Isotype t_diff = build_isotype(arena, m, diff, 0);
  CHECK(realizes(m, diff, t_diff, arena));
  CHECK_FALSE(realizes(m, std::vector<int>{1, 1}, t_diff, arena));
}

TEST_CASE("constants enter the base case") {
  const auto algebra = goedel(3);
  ModelData d;
  d.algebra = algebra;
  d.sig = Signature({RelationSymbol{"E", 2}}, {"c"});
  d.domain_size = 2;
  d.relations["E"] = {2, 0, 0, 2};
  d.constants["c"] = 0;
  const Model m(d);
  ModelData d2 = d;
  d2.constants["c"] = 1;
  const Model n(std::move(d2));
  Arena arena(m.sig(), algebra);
  // anchor element 0 == c in m but != c in n
  const std::vector<int> zero{0};
  const Isotype t = build_isotype(arena, m, zero, 0);
  CHECK(realizes(m, zero, t, arena));
  CHECK_FALSE(realizes(n, zero, t, arena));
  CHECK(realizes(n, std::vector<int>{1}, t, arena));
}

TEST_CASE("memo keeps the formula a dag, not a tree") {
  const auto algebra = lukasiewicz(3);
  const Model m = random_graph_model(algebra, 47, 0, 3, 3);
  Arena arena(m.sig(), algebra);
  const std::vector<int> anchor{0};
  const Isotype t = build_isotype(arena, m, anchor, 2);
  // distinct (extension, rank) subproblems: sum over i <= k of |M|^i
  std::size_t bound = 0;
  std::size_t pow = 1;
  for (int i = 0; i <= 2; ++i) {
    bound += pow;
    pow *= static_cast<std::size_t>(m.domain_size());
  }
  CHECK(t.memo_entries == bound);
  // the shared arena stays far below the naive tree expansion
  CHECK(arena.dag_size(t.formula) < 4000);
  CHECK(arena.qd(t.formula) == 2);
}

TEST_CASE("node cap aborts oversized builds") {
  const auto algebra = lukasiewicz(3);
  const Model m = random_graph_model(algebra, 53, 0, 3, 3);
  Arena arena(m.sig(), algebra);
  const std::vector<int> anchor{0};
  CHECK_THROWS_AS(build_isotype(arena, m, anchor, 3, 50), Error);
}

TEST_CASE("anchor bounds are checked") {
  const auto algebra = lukasiewicz(3);
  const Model m = two_point(algebra, 1, 1);
  Arena arena(m.sig(), algebra);
  const std::vector<int> bad{7};
  CHECK_THROWS_AS(build_isotype(arena, m, bad, 0), Error);
  const Isotype t = build_isotype(arena, m, std::vector<int>{0}, 0);
  CHECK_THROWS_AS(realizes(m, std::vector<int>{0, 1}, t, arena), Error);
}
