#include "reslat/repro.hpp"

#include <sstream>

#include "reslat/gaifman.hpp"
#include "reslat/games.hpp"
#include "reslat/harness.hpp"
#include "reslat/parser.hpp"
#include "reslat/queries.hpp"

namespace reslat {

namespace {

Model two_point_graph(const AlgebraPtr& algebra, Elem st, Elem ts) {
  ModelData d;
  d.algebra = algebra;
  d.sig = Signature({RelationSymbol{"E", 2}}, {});
  d.domain_size = 2;
  d.relations["E"] = {algebra->unit(), st, ts, algebra->unit()};
  return Model(std::move(d));
}

ReproOutcome sec3_counterexample() {
  auto g3 = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::goedel_n, 3));
  const Elem a = *g3->element_of("0");
  const Elem b = *g3->element_of("1/2");
  const Model m = two_point_graph(g3, a, a);
  const Model n = two_point_graph(g3, b, a);

  Arena arena(m.sig(), g3);
  const Formula phi = parse(arena, "forall x forall y (E(x,y) \\ E(y,x))");

  std::ostringstream out;
  bool ok = true;
  auto expect = [&](bool cond) { ok = ok && cond; };

  out << "case study sec3-counterexample\n";
  out << "algebra: Goedel chain G3; pair of two-point weighted graphs with\n";
  out << "  E(s,s) = E(t,t) = 1 on both sides; M has E(s,t) = E(t,s) = " << g3->label(a)
      << ", N has E(s,t) = " << g3->label(b) << " and E(t,s) = " << g3->label(a) << "\n";
  out << "phi = " << arena.print(phi) << "\n";

  const Elem vm = eval(m, arena, phi);
  const Elem vn = eval(n, arena, phi);
  out << "||phi||^M = " << g3->label(vm) << "\n";
  out << "||phi||^N = " << g3->label(vn) << "\n";
  expect(vm == g3->unit() && vn == a);

  const bool equiv2 = k_equivalent(m, n, 2).equivalent;
  out << "k_equivalent(M, N, k=2) = " << (equiv2 ? "true" : "false") << "\n";
  expect(!equiv2);

  const HanfReport naive = hanf_check(m, n, 2, GaifmanMetric::modelling());
  const HanfReport strict = hanf_check(m, n, 2);
  out << "hanf premise, modelling metric:  " << (naive.premise ? "satisfied" : "violated") << "\n";
  out << "hanf premise, strict-bot metric: " << (strict.premise ? "satisfied" : "violated")
      << "\n";
  expect(naive.premise && !strict.premise);

  out << "summary: the modelling-metric premise holds for a pair that is not\n";
  out << "  2-strongly-equivalent, so no Hanf theorem can rest on that metric;\n";
  out << "  the strict-bot premise correctly fails on this pair.\n";
  return {out.str(), ok};
}

ReproOutcome sec5_example() {
  auto chain = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::goedel_n, 4)
          .relabeled({"0", "1/2", "3/4", "1"}));
  ModelData dm;
  dm.algebra = chain;
  dm.sig = Signature({RelationSymbol{"P", 1}}, {});
  dm.domain_size = 1;
  dm.relations["P"] = {*chain->element_of("3/4")};
  ModelData dn = dm;
  dn.relations["P"] = {*chain->element_of("1/2")};
  const Model m{std::move(dm)};
  const Model n{std::move(dn)};

  std::ostringstream out;
  bool ok = true;
  auto expect = [&](bool cond) { ok = ok && cond; };

  out << "case study sec5-example\n";
  out << "algebra: Goedel chain on {0, 1/2, 3/4, 1}; one-element models with\n";
  out << "  P(s) = 3/4 on M and P(s) = 1/2 on N\n";

  Arena arena(m.sig(), chain);
  const Formula exists_p = parse(arena, "exists x P(x)");
  const Elem vm = eval(m, arena, exists_p);
  const Elem vn = eval(n, arena, exists_p);
  out << "||exists x P(x)||^M = " << chain->label(vm) << "\n";
  out << "||exists x P(x)||^N = " << chain->label(vn) << "\n";
  expect(chain->label(vm) == "3/4" && chain->label(vn) == "1/2");

  const std::pair<int, int> anchor[1] = {{0, 0}};
  const bool equiv0 = k_equivalent(m, n, 0, anchor).equivalent;
  out << "k_equivalent(M, N, k=0, anchor (s,s)) = " << (equiv0 ? "true" : "false") << "\n";
  expect(!equiv0);

  const GaifmanMetric metric = GaifmanMetric::strict_bot(*chain);
  bool any_found = false;
  for (int r = 0; r <= 2; ++r)
    for (int q = 0; q <= 2; ++q) {
      const DistinguishResult res = distinguish(arena, m, n, metric, r, q, 3);
      if (res.sentence) any_found = true;
    }
  out << "distinguish over r <= 2, q <= 2, scatter <= 3: "
      << (any_found ? "separating sentence found" : "none") << "\n";
  expect(!any_found);

  out << "summary: the models differ in value (not strongly equivalent) yet no\n";
  out << "  scattered basic local sentence in the search space separates them.\n";
  return {out.str(), ok};
}

ReproOutcome sec6_connectivity() {
  auto l3 = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::lukasiewicz_n, 3));
  const Model cycle = cycle_model(l3, 8, l3->unit());
  const Model split = two_cycles_model(l3, 4, l3->unit());

  std::ostringstream out;
  bool ok = true;
  auto expect = [&](bool cond) { ok = ok && cond; };

  out << "case study sec6-connectivity\n";
  out << "algebra: Lukasiewicz chain L3; M = one 8-cycle, N = two 4-cycles,\n";
  out << "  unit-weight edges, all other pairs at bottom\n";

  const bool swap1 = swap_check(cycle, split, 1);
  out << "swap relation at radius 1: " << (swap1 ? "holds" : "fails") << "\n";
  expect(swap1);

  const Query q = bot_connectivity_query();
  const bool qm = q.evaluate(cycle, {});
  const bool qn = q.evaluate(split, {});
  out << "bot-connectivity(M) = " << (qm ? 1 : 0) << "\n";
  out << "bot-connectivity(N) = " << (qn ? 1 : 0) << "\n";
  expect(qm && !qn);

  const auto gen = [&](int) -> std::optional<PairSample> {
    return PairSample{cycle, split, {}, std::nullopt};
  };
  const QueryLocalityReport report = test_hanf_local(q, 1, gen, 1);
  out << "hanf-locality test at radius 1: " << report.violations.size()
      << " violation(s) in " << report.applicable << " applicable pair(s)\n";
  expect(report.applicable == 1 && report.violations.size() == 1);

  out << "certificate: the swap relation holds at radius 1 yet the query\n";
  out << "  disagrees, so bot-connectivity is not Hanf-local at rank 1\n";
  out << "  (and hence not definable).\n";
  return {out.str(), ok};
}

ReproOutcome sec6_transitive_closure() {
  auto l4 = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::lukasiewicz_n, 4));
  const Elem on = *l4->element_of("2/3");
  const Elem off = *l4->element_of("1/3");
  const int r = 1;
  const Model chain = directed_chain_model(l4, 4 * r + 4, on, off);
  const GaifmanMetric metric = GaifmanMetric::ge(on);

  std::ostringstream out;
  bool ok = true;
  auto expect = [&](bool cond) { ok = ok && cond; };

  out << "case study sec6-transitive-closure\n";
  out << "algebra: Lukasiewicz chain L4, threshold t = 2/3; M = directed t-chain\n";
  out << "  of length 8 (forward edges 2/3, everything else 1/3)\n";

  const std::vector<int> mn{r, 3 * r + 2};  // positions r+1 and 3r+3, 0-based
  const std::vector<int> nm{3 * r + 2, r};
  const Sphere s1 = sphere(chain, metric, mn, r);
  const Sphere s2 = sphere(chain, metric, nm, r);
  const bool iso = same_sphere_type(s1, s2);
  out << "pointed 1-spheres of (m,n) and (n,m) isomorphic: " << (iso ? "yes" : "no") << "\n";
  expect(iso);

  const Query q = transitive_closure_query(on);
  const bool fwd = q.evaluate(chain, mn);
  const bool bwd = q.evaluate(chain, nm);
  out << "(m,n) in t-transitive-closure: " << (fwd ? "yes" : "no") << "\n";
  out << "(n,m) in t-transitive-closure: " << (bwd ? "yes" : "no") << "\n";
  expect(fwd && !bwd);

  const auto gen = [&](int) -> std::optional<Model> { return chain; };
  const QueryLocalityReport report = test_gaifman_local(q, r, metric, gen, 1);
  out << "gaifman-locality test at radius 1: " << report.violations.size()
      << " violation(s) among " << report.applicable << " sphere-isomorphic tuple pair(s)\n";
  expect(!report.violations.empty());

  out << "certificate: two tuples with pointed-isomorphic 1-spheres disagree,\n";
  out << "  so the t-transitive-closure query is not Gaifman-local at radius 1\n";
  out << "  (and hence not definable).\n";
  return {out.str(), ok};
}

}  // namespace

std::vector<std::string> repro_ids() {
  return {"sec3-counterexample", "sec5-example", "sec6-connectivity", "sec6-transitive-closure"};
}

ReproOutcome run_repro(const std::string& id) {
  if (id == "sec3-counterexample") return sec3_counterexample();
  if (id == "sec5-example") return sec5_example();
  if (id == "sec6-connectivity") return sec6_connectivity();
  if (id == "sec6-transitive-closure") return sec6_transitive_closure();
  throw Error(ErrorCode::BadUsage, "unknown repro id '" + id + "' (see repro --list)");
}

}  // namespace reslat
