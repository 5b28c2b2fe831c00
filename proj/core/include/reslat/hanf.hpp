#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reslat/games.hpp"
#include "reslat/metric.hpp"

namespace reslat {

/// Radii of the Hanf theorem: r_j = (3^j - 1) / 2, equivalently r_0 = 0 and
/// r_{j+1} = 3 r_j + 1.
std::vector<long long> hanf_radii(int k);

enum class HanfVerdict { EqualCounts, BothLarge, Fail };

struct HanfClassRow {
  int radius = 0;
  int class_id = 0;
  std::vector<int> representative_tuple;
  int representative_model = 0;
  long long count_left = 0;
  long long count_right = 0;
  HanfVerdict verdict = HanfVerdict::Fail;
};

struct HanfReport {
  int k = 0;
  std::vector<long long> radii;
  long long max_sphere_size = 0;  // e: max |B(r_k, x)| over single elements of both models
  GaifmanMetric metric;
  bool nondefault_metric = false;  // theorem is stated for the strict bottom metric
  std::vector<HanfClassRow> rows;
  bool premise = true;
};

/// Checks the Hanf premise: for every radius r <= r_k and every singleton
/// sphere type, the two models either realize it equally often or both more
/// than k*e times. The metric defaults to the strict bottom threshold; any
/// override is flagged in the report.
HanfReport hanf_check(const Model& m, const Model& n, int k,
                      std::optional<GaifmanMetric> metric_override = std::nullopt);

/// The swap relation at radius r: every singleton r-sphere type is realized
/// the same number of times in both models (equivalently, a type-preserving
/// bijection exists). Anchored variants pass models expanded with anchor
/// constants.
bool swap_check(const Model& m, const Model& n, int r,
                std::optional<GaifmanMetric> metric_override = std::nullopt);

struct PairSample {
  Model left;
  Model right;
  std::vector<std::pair<int, int>> anchor;
  std::optional<GaifmanMetric> metric_override;
};

/// Yields the sample for a trial index, or nullopt when exhausted.
using PairGenerator = std::function<std::optional<PairSample>(int trial)>;

enum class HanfHarnessMode { TheoremPremise, SwapCorollary };

struct HanfHarnessReport {
  int trials_requested = 0;
  int trials_run = 0;
  int applicable = 0;       // premise-true (or swap-true) pairs
  int out_of_contract = 0;  // pairs overriding the strict bottom metric
  std::vector<int> violations;  // trial indices where k_equivalent failed
};

/// Runs the theorem empirically: every generated pair whose premise holds
/// (TheoremPremise: the Hanf condition at rank k; SwapCorollary: the swap
/// relation at radius 3^k) must be k-equivalent. Any violation is a bug in
/// either the theorem transcription or the machinery, and is reported with
/// its replayable trial index. Throws GeneratorExhausted when the generator
/// runs dry early.
HanfHarnessReport verify_hanf_theorem(const PairGenerator& generator, int k, int trials,
                                      HanfHarnessMode mode = HanfHarnessMode::TheoremPremise);

}  // namespace reslat
