#include <benchmark/benchmark.h>

#include <memory>

#include "reslat/eval.hpp"
#include "reslat/gaifman.hpp"
#include "reslat/games.hpp"
#include "reslat/harness.hpp"
#include "reslat/isotypes.hpp"
#include "reslat/metric.hpp"
#include "reslat/parser.hpp"

namespace {

using namespace reslat;

AlgebraPtr l3() {
  static AlgebraPtr a = std::make_shared<ResiduatedLattice>(
      ResiduatedLattice::builtin(BuiltinAlgebra::lukasiewicz_n, 3));
  return a;
}

void BM_ValidateAlgebra(benchmark::State& state) {
  const OperationTables tables =
      ResiduatedLattice::builtin(BuiltinAlgebra::lukasiewicz_n, static_cast<int>(state.range(0)))
          .tables();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ResiduatedLattice::validate(tables));
  }
}
BENCHMARK(BM_ValidateAlgebra)->Arg(3)->Arg(6)->Arg(10);

void BM_IsotypeBuild(benchmark::State& state) {
  const Model m = random_graph_model(l3(), 1, 0, 4, 4);
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Arena arena(m.sig(), l3());
    const std::vector<int> anchor{0};
    benchmark::DoNotOptimize(build_isotype(arena, m, anchor, rank));
  }
}
BENCHMARK(BM_IsotypeBuild)->Arg(1)->Arg(2)->Arg(3);

void BM_IsotypeRealizes(benchmark::State& state) {
  const Model m = random_graph_model(l3(), 1, 0, 4, 4);
  const Model n = random_graph_model(l3(), 1, 1, 4, 4);
  Arena arena(m.sig(), l3());
  const std::vector<int> anchor{0};
  const Isotype t = build_isotype(arena, m, anchor, static_cast<int>(state.range(0)));
  const std::vector<int> candidate{0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(realizes(n, candidate, t, arena));
  }
}
BENCHMARK(BM_IsotypeRealizes)->Arg(1)->Arg(2);

void BM_GameDecision(benchmark::State& state) {
  const int m_len = static_cast<int>(state.range(0));
  const Model cycle = cycle_model(l3(), 2 * m_len, l3()->unit());
  const Model split = two_cycles_model(l3(), m_len, l3()->unit());
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_equivalent(cycle, split, 2));
  }
}
BENCHMARK(BM_GameDecision)->Arg(4)->Arg(8)->Arg(12);

void BM_SphereTypeIndex(benchmark::State& state) {
  const Model cycle = cycle_model(l3(), static_cast<int>(state.range(0)), l3()->unit());
  const Model* models[1] = {&cycle};
  const GaifmanMetric metric = GaifmanMetric::strict_bot(*l3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphere_type_index(models, metric, 2, 1));
  }
}
BENCHMARK(BM_SphereTypeIndex)->Arg(8)->Arg(16);

void BM_ThetaEval(benchmark::State& state) {
  const Model m = random_graph_model(l3(), 2, 0, 6, 6);
  Arena arena(m.sig(), l3());
  const Formula t = theta(arena, static_cast<int>(state.range(0)), arena.v("x"), arena.v("y"));
  const int xv = *arena.find_var("x");
  const int yv = *arena.find_var("y");
  for (auto _ : state) {
    Evaluator e(m, arena);
    Elem acc = 0;
    for (int x = 0; x < m.domain_size(); ++x)
      for (int y = 0; y < m.domain_size(); ++y) {
        Env env;
        env.bind(xv, x);
        env.bind(yv, y);
        acc ^= e.eval(t, env);
      }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ThetaEval)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
