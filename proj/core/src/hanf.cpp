#include "reslat/hanf.hpp"

namespace reslat {

std::vector<long long> hanf_radii(int k) {
  if (k < 0) throw Error(ErrorCode::BadUsage, "k must be non-negative");
  std::vector<long long> radii;
  long long r = 0;
  for (int j = 0; j <= k; ++j) {
    radii.push_back(r);
    r = 3 * r + 1;
  }
  return radii;
}

namespace {

GaifmanMetric resolve_metric(const Model& m, const std::optional<GaifmanMetric>& override_metric,
                             bool& nondefault) {
  if (override_metric) {
    nondefault = !(*override_metric == GaifmanMetric::strict_bot(m.algebra()));
    return *override_metric;
  }
  nondefault = false;
  return GaifmanMetric::strict_bot(m.algebra());
}

}  // namespace

HanfReport hanf_check(const Model& m, const Model& n, int k,
                      std::optional<GaifmanMetric> metric_override) {
  if (m.sig() != n.sig())
    throw Error(ErrorCode::SignatureMismatch, "hanf_check needs identical signatures");
  if (!m.algebra().same_structure(n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "hanf_check needs the same algebra");

  HanfReport report;
  report.k = k;
  report.radii = hanf_radii(k);
  report.metric = resolve_metric(m, metric_override, report.nondefault_metric);
  const int r_k = static_cast<int>(report.radii.back());

  for (int x = 0; x < m.domain_size(); ++x)
    report.max_sphere_size = std::max(
        report.max_sphere_size,
        static_cast<long long>(sphere(m, report.metric, std::vector<int>{x}, r_k).elements.size()));
  for (int x = 0; x < n.domain_size(); ++x)
    report.max_sphere_size = std::max(
        report.max_sphere_size,
        static_cast<long long>(sphere(n, report.metric, std::vector<int>{x}, r_k).elements.size()));

  const long long bound = static_cast<long long>(k) * report.max_sphere_size;
  const Model* models[2] = {&m, &n};
  for (int r = 0; r <= r_k; ++r) {
    const SphereTypeIndex index = sphere_type_index(models, report.metric, r, 1);
    for (std::size_t c = 0; c < index.classes.size(); ++c) {
      HanfClassRow row;
      row.radius = r;
      row.class_id = static_cast<int>(c);
      row.representative_tuple = index.classes[c].representative_tuple;
      row.representative_model = index.classes[c].representative_model;
      row.count_left = index.classes[c].counts[0];
      row.count_right = index.classes[c].counts[1];
      if (row.count_left == row.count_right)
        row.verdict = HanfVerdict::EqualCounts;
      else if (row.count_left > bound && row.count_right > bound)
        row.verdict = HanfVerdict::BothLarge;
      else {
        row.verdict = HanfVerdict::Fail;
        report.premise = false;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

bool swap_check(const Model& m, const Model& n, int r,
                std::optional<GaifmanMetric> metric_override) {
  if (m.sig() != n.sig())
    throw Error(ErrorCode::SignatureMismatch, "swap_check needs identical signatures");
  if (!m.algebra().same_structure(n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "swap_check needs the same algebra");
  bool nondefault = false;
  const GaifmanMetric metric = resolve_metric(m, metric_override, nondefault);
  const Model* models[2] = {&m, &n};
  const SphereTypeIndex index = sphere_type_index(models, metric, r, 1);
  for (const auto& cls : index.classes)
    if (cls.counts[0] != cls.counts[1]) return false;
  return true;
}

HanfHarnessReport verify_hanf_theorem(const PairGenerator& generator, int k, int trials,
                                      HanfHarnessMode mode) {
  HanfHarnessReport report;
  report.trials_requested = trials;
  long long swap_radius = 1;
  for (int j = 0; j < k; ++j) swap_radius *= 3;

  for (int trial = 0; trial < trials; ++trial) {
    std::optional<PairSample> sample = generator(trial);
    if (!sample)
      throw Error(ErrorCode::GeneratorExhausted,
                  "pair generator ran dry after " + std::to_string(trial) + " trials");
    ++report.trials_run;

    if (sample->metric_override &&
        !(*sample->metric_override == GaifmanMetric::strict_bot(sample->left.algebra()))) {
      ++report.out_of_contract;  // the theorem premise is stated for the strict bottom metric
      continue;
    }

    bool applicable = false;
    if (mode == HanfHarnessMode::TheoremPremise) {
      applicable = hanf_check(sample->left, sample->right, k).premise;
    } else {
      // anchored swap: pin each anchor pair with a fresh constant on each side
      Model lm = sample->left;
      Model rm = sample->right;
      if (!sample->anchor.empty()) {
        std::vector<int> le, re;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sample->anchor.size(); ++i) {
          le.push_back(sample->anchor[i].first);
          re.push_back(sample->anchor[i].second);
          std::string name = "a" + std::to_string(i + 1);
          while (lm.sig().constant_id(name) || lm.sig().relation_id(name)) name += "'";
          names.push_back(name);
        }
        lm = lm.with_constants(le, names);
        rm = rm.with_constants(re, names);
      }
      applicable = swap_check(lm, rm, static_cast<int>(swap_radius));
    }
    if (!applicable) continue;
    ++report.applicable;

    if (!k_equivalent(sample->left, sample->right, k, sample->anchor).equivalent)
      report.violations.push_back(trial);
  }
  return report;
}

}  // namespace reslat
