#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "reslat/harness.hpp"

using namespace reslat;
using namespace reslat::testing;

TEST_CASE("hanf radii") {
  CHECK(hanf_radii(0) == std::vector<long long>{0});
  CHECK(hanf_radii(2) == std::vector<long long>{0, 1, 4});
  const auto radii = hanf_radii(8);
  for (std::size_t j = 0; j + 1 < radii.size(); ++j) CHECK(radii[j + 1] == 3 * radii[j] + 1);
  for (std::size_t j = 0; j < radii.size(); ++j) {
    long long pow3 = 1;
    for (std::size_t i = 0; i < j; ++i) pow3 *= 3;
    CHECK(radii[j] == (pow3 - 1) / 2);
  }
}

TEST_CASE("a model against itself satisfies the premise with equal counts") {
  const auto l3 = lukasiewicz(3);
  const Model m = random_graph_model(l3, 71, 0, 3, 5);
  const HanfReport report = hanf_check(m, m, 2);
  CHECK(report.premise);
  CHECK_FALSE(report.nondefault_metric);
  for (const auto& row : report.rows) CHECK(row.verdict == HanfVerdict::EqualCounts);
}

TEST_CASE("the two-point pair: naive premise holds, strict premise fails") {
  const auto g3 = goedel(3);
  const Model m = two_point(g3, 0, 0);
  const Model n = two_point(g3, 1, 0);

  const HanfReport naive = hanf_check(m, n, 2, GaifmanMetric::modelling());
  CHECK(naive.premise);
  CHECK(naive.nondefault_metric);
  CHECK_FALSE(k_equivalent(m, n, 2).equivalent);  // the naive metric proves nothing

  const HanfReport strict = hanf_check(m, n, 2);
  CHECK_FALSE(strict.premise);

  // same failure shape over L4 with a = 1/3, b = 2/3
  const auto l4 = lukasiewicz(4);
  const HanfReport strict4 = hanf_check(two_point(l4, 1, 1), two_point(l4, 2, 1), 2);
  CHECK_FALSE(strict4.premise);
}

TEST_CASE("premise is symmetric in the pair") {
  const auto l3 = lukasiewicz(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PairSample s = block_shuffle_pair(l3, 73, trial, 1);
    const HanfReport ab = hanf_check(s.left, s.right, 1);
    const HanfReport ba = hanf_check(s.right, s.left, 1);
    CHECK(ab.premise == ba.premise);
    CHECK(ab.max_sphere_size == ba.max_sphere_size);
  }
}

TEST_CASE("swap relation: isomorphic pairs, size mismatch, the cycle pair") {
  const auto l3 = lukasiewicz(3);
  const Model cycle = cycle_model(l3, 8, l3->unit());
  const Model split = two_cycles_model(l3, 4, l3->unit());
  CHECK(swap_check(cycle, split, 1));
  CHECK_FALSE(swap_check(cycle, split, 4));  // radius sees the whole cycles

  for (int r = 0; r <= 3; ++r) CHECK(swap_check(cycle, cycle, r));

  const Model small = cycle_model(l3, 6, l3->unit());
  CHECK_FALSE(swap_check(cycle, small, 0));  // counts cannot match across sizes
}

TEST_CASE("swap monotone under shrinking radius") {
  const auto l3 = lukasiewicz(3);
  for (int trial = 0; trial < 12; ++trial) {
    const PairSample s = swap_pair(l3, 79, trial, 1);
    for (int r = 3; r >= 1; --r)
      if (swap_check(s.left, s.right, r))
        CHECK(swap_check(s.left, s.right, r - 1));
  }
}

TEST_CASE("theorem harness: block pairs never defeat the theorem") {
  const auto l3 = lukasiewicz(3);
  const auto gen = [&](int trial) -> std::optional<PairSample> {
    return block_shuffle_pair(l3, 83, trial, 1);
  };
  const HanfHarnessReport report = verify_hanf_theorem(gen, 1, 25);
  CHECK(report.trials_run == 25);
  CHECK(report.applicable > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("corollary harness: swap-true pairs at radius 3^k are k-equivalent") {
  const auto l3 = lukasiewicz(3);
  const auto gen = [&](int trial) -> std::optional<PairSample> {
    return swap_pair(l3, 89, trial, 1);
  };
  const HanfHarnessReport report =
      verify_hanf_theorem(gen, 1, 12, HanfHarnessMode::SwapCorollary);
  CHECK(report.trials_run == 12);
  CHECK(report.applicable > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("identical pair stream is trivially violation-free") {
  const auto l3 = lukasiewicz(3);
  const Model m = random_graph_model(l3, 97, 0, 3, 4);
  const auto gen = [&](int) -> std::optional<PairSample> {
    return PairSample{m, m, {}, std::nullopt};
  };
  const HanfHarnessReport report = verify_hanf_theorem(gen, 2, 5);
  CHECK(report.applicable == 5);
  CHECK(report.violations.empty());
}

TEST_CASE("non-default metrics are flagged out of contract") {
  const auto g3 = goedel(3);
  const Model m = two_point(g3, 0, 0);
  const Model n = two_point(g3, 1, 0);
  const auto gen = [&](int) -> std::optional<PairSample> {
    return PairSample{m, n, {}, GaifmanMetric::modelling()};
  };
  const HanfHarnessReport report = verify_hanf_theorem(gen, 2, 3);
  CHECK(report.out_of_contract == 3);
  CHECK(report.applicable == 0);
  CHECK(report.violations.empty());
}

TEST_CASE("a dry generator raises GeneratorExhausted") {
  const auto gen = [](int trial) -> std::optional<PairSample> {
    (void)trial;
    return std::nullopt;
  };
  CHECK_THROWS_AS(verify_hanf_theorem(gen, 1, 2), Error);
}
