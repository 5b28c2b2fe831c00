#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "reslat/harness.hpp"
#include "reslat/isomorphism.hpp"
#include "reslat/parser.hpp"
#include "reslat/queries.hpp"

using namespace reslat;
using namespace reslat::testing;

TEST_CASE("definable queries: constants, thresholds, the one-point pair") {
  auto chain = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::goedel_n, 4).relabeled({"0", "1/2", "3/4", "1"}));
  auto arena = std::make_shared<Arena>(unary_sig(), chain);

  const Query truth = definable_query(arena, arena->one(), QueryMode::Models);
  CHECK(truth.arity == 0);
  const Model m = unary_model(chain, {*chain->element_of("3/4")});
  const Model n = unary_model(chain, {*chain->element_of("1/2")});
  CHECK(truth.evaluate(m, {}));
  CHECK(truth.evaluate(n, {}));

  const Query p34 = definable_query(arena, parse(*arena, "P(x)"), QueryMode::Ge,
                                    *chain->element_of("3/4"));
  CHECK(p34.arity == 1);
  const int zero[1] = {0};
  CHECK(p34.evaluate(m, zero));        // {s}
  CHECK_FALSE(p34.evaluate(n, zero));  // empty
}

TEST_CASE("threshold modes reduce to modelling through the syntax") {
  const auto l4 = lukasiewicz(4);
  auto arena = std::make_shared<Arena>(unary_sig(), l4);
  const Formula p = parse(*arena, "P(x)");
  const Elem c = *l4->flags().co_atom;
  for (Elem a = 0; a < l4->size(); ++a) {
    const Query ge = definable_query(arena, p, QueryMode::Ge, a);
    const Query ge_syntactic =
        definable_query(arena, arena->lres(arena->truth_const(a), p), QueryMode::Models);
    const Query gt = definable_query(arena, p, QueryMode::Gt, a);
    const Query gt_syntactic = definable_query(
        arena, arena->lres(arena->lres(p, arena->truth_const(a)), arena->truth_const(c)),
        QueryMode::Models);
    for (const Model& m : all_unary_models(l4, 2))
      for (int x = 0; x < m.domain_size(); ++x) {
        const int tuple[1] = {x};
        CHECK(ge.evaluate(m, tuple) == ge_syntactic.evaluate(m, tuple));
        CHECK(gt.evaluate(m, tuple) == gt_syntactic.evaluate(m, tuple));
      }
  }
}

TEST_CASE("builtin queries on paths, cycles, chains") {
  const auto l3 = lukasiewicz(3);
  const Query conn = bot_connectivity_query();

  const Model edge = graph_model(l3, 2, {0, 2, 2, 0});
  CHECK(conn.evaluate(edge, {}));
  const Model cycle = cycle_model(l3, 8, l3->unit());
  const Model split = two_cycles_model(l3, 4, l3->unit());
  CHECK(conn.evaluate(cycle, {}));
  CHECK_FALSE(conn.evaluate(split, {}));

  const auto l4 = lukasiewicz(4);
  const Elem t = *l4->element_of("2/3");
  const Query tc = transitive_closure_query(t);
  const Model chain = directed_chain_model(l4, 8, t, *l4->element_of("1/3"));
  const int head_tail[2] = {0, 7};
  const int tail_head[2] = {7, 0};
  CHECK(tc.evaluate(chain, head_tail));
  CHECK_FALSE(tc.evaluate(chain, tail_head));
}

TEST_CASE("queries are closed under isomorphism") {
  const auto l3 = lukasiewicz(3);
  auto arena = std::make_shared<Arena>(graph_sig(), l3);
  const Query definable =
      definable_query(arena, parse(*arena, "exists y E(x,y)"), QueryMode::Gt, 0);
  const Query conn = bot_connectivity_query();
  const Query tc = transitive_closure_query(1);

  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    const Model m = random_graph_model(l3, 127, trial, 2, 4);
    std::vector<int> perm(static_cast<std::size_t>(m.domain_size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Elem> image(static_cast<std::size_t>(m.domain_size()) * m.domain_size());
    for (int i = 0; i < m.domain_size(); ++i)
      for (int j = 0; j < m.domain_size(); ++j) {
        const int tup[2] = {i, j};
        image[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * m.domain_size() +
              static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = m.value(0, tup);
      }
    const Model h = graph_model(l3, m.domain_size(), image);

    CHECK(conn.evaluate(m, {}) == conn.evaluate(h, {}));
    for (int x = 0; x < m.domain_size(); ++x) {
      const int t1[1] = {x};
      const int t2[1] = {perm[static_cast<std::size_t>(x)]};
      CHECK(definable.evaluate(m, t1) == definable.evaluate(h, t2));
      for (int y = 0; y < m.domain_size(); ++y) {
        const int p1[2] = {x, y};
        const int p2[2] = {perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]};
        CHECK(tc.evaluate(m, p1) == tc.evaluate(h, p2));
      }
    }
  }
}

TEST_CASE("hanf locality: constant queries never violate; connectivity does") {
  const auto l3 = lukasiewicz(3);
  auto arena = std::make_shared<Arena>(graph_sig(), l3);
  const Query truth = definable_query(arena, arena->one(), QueryMode::Models);
  const auto random_pairs = [&](int trial) -> std::optional<PairSample> {
    return PairSample{random_graph_model(l3, 131, 2 * trial, 2, 4),
                      random_graph_model(l3, 131, 2 * trial + 1, 2, 4),
                      {},
                      std::nullopt};
  };
  const QueryLocalityReport constant_report = test_hanf_local(truth, 1, random_pairs, 30);
  CHECK(constant_report.violations.empty());

  const Model cycle = cycle_model(l3, 8, l3->unit());
  const Model split = two_cycles_model(l3, 4, l3->unit());
  const auto fixed = [&](int) -> std::optional<PairSample> {
    return PairSample{cycle, split, {}, std::nullopt};
  };
  const QueryLocalityReport viol = test_hanf_local(bot_connectivity_query(), 1, fixed, 1);
  CHECK(viol.applicable == 1);
  REQUIRE(viol.violations.size() == 1);
  CHECK(viol.violations[0].left_in);
  CHECK_FALSE(viol.violations[0].right_in);
}

namespace {

// Disjoint union of two copies of the same random block: every tuple in one
// copy has a mirror with an isomorphic sphere in the other.
Model mirrored_blocks(const AlgebraPtr& algebra, std::uint64_t seed, int trial) {
  const Model b = random_graph_model(algebra, seed, trial, 2, 3);
  const int nb = b.domain_size();
  const int n = 2 * nb;
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, *algebra->flags().bot);
  for (int copy = 0; copy < 2; ++copy)
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        const int t[2] = {i, j};
        e[static_cast<std::size_t>(copy * nb + i) * n + (copy * nb + j)] = b.value(0, t);
      }
  return graph_model(algebra, n, e);
}

// Swap-true pairs with empty anchors: relabeled copies alternating with the
// long-cycle-versus-two-cycles construction.
PairSample zeroary_swap_pair(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int k) {
  PairSample s = swap_pair(algebra, seed, trial, k);
  s.anchor.clear();
  return s;
}

}  // namespace

TEST_CASE("definable queries are hanf-local at radius 3^qd") {
  const auto l3 = lukasiewicz(3);
  auto arena = std::make_shared<Arena>(graph_sig(), l3);
  // a qd-1 sentence: some vertex has a designated loop
  const Query q =
      definable_query(arena, parse(*arena, "exists x E(x,x)"), QueryMode::Models);
  const auto gen = [&](int trial) -> std::optional<PairSample> {
    return zeroary_swap_pair(l3, 137, trial, 1);
  };
  const QueryLocalityReport report = test_hanf_local(q, 3, gen, 60);
  CHECK(report.applicable > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("gaifman locality: identity-like query, transitive-closure violation") {
  const auto l4 = lukasiewicz(4);
  auto arena = std::make_shared<Arena>(graph_sig(), l4);
  const Query self_eq = definable_query(arena, parse(*arena, "x = x"), QueryMode::Models);
  const auto gen = [&](int trial) -> std::optional<Model> {
    return mirrored_blocks(l4, 139, trial);
  };
  const QueryLocalityReport clean =
      test_gaifman_local(self_eq, 1, GaifmanMetric::strict_bot(*l4), gen, 20);
  CHECK(clean.applicable > 0);
  CHECK(clean.violations.empty());

  const Elem t = *l4->element_of("2/3");
  const Model chain = directed_chain_model(l4, 8, t, *l4->element_of("1/3"));
  const auto fixed = [&](int) -> std::optional<Model> { return chain; };
  const QueryLocalityReport viol =
      test_gaifman_local(transitive_closure_query(t), 1, GaifmanMetric::ge(t), fixed, 1);
  REQUIRE_FALSE(viol.violations.empty());
  // the witness pair from the construction: positions 2 and 6 (1-based)
  bool witnessed = false;
  for (const auto& v : viol.violations)
    witnessed = witnessed || (v.left_tuple == std::vector<int>{1, 5} &&
                              v.right_tuple == std::vector<int>{5, 1}) ||
                (v.left_tuple == std::vector<int>{5, 1} && v.right_tuple == std::vector<int>{1, 5});
  CHECK(witnessed);
}

TEST_CASE("definable queries are gaifman-local at a generous radius") {
  const auto l4 = lukasiewicz(4);
  auto arena = std::make_shared<Arena>(graph_sig(), l4);
  const Query q =
      definable_query(arena, parse(*arena, "exists y E(x,y)"), QueryMode::Ge, 2);
  const auto gen = [&](int trial) -> std::optional<Model> {
    return mirrored_blocks(l4, 149, trial);
  };
  const QueryLocalityReport report =
      test_gaifman_local(q, 7, GaifmanMetric::strict_bot(*l4), gen, 40);
  CHECK(report.applicable > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("connectivity needs a bounded algebra - which finite lattices give") {
  const auto l3 = lukasiewicz(3);
  const Query conn = bot_connectivity_query();
  const Model single = graph_model(l3, 1, {0});
  CHECK(conn.evaluate(single, {}));  // one point is trivially connected
}
