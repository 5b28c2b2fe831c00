#include "reslat/queries.hpp"

#include <deque>

namespace reslat {

Query definable_query(std::shared_ptr<Arena> arena, Formula f, QueryMode mode, Elem a) {
  const auto& fv = arena->free_vars(f);
  if (mode != QueryMode::Models && (a < 0 || a >= arena->algebra().size()))
    throw Error(ErrorCode::BadUsage, "comparison element out of range");
  Query q;
  q.arity = static_cast<int>(fv.size());
  q.name = arena->print(f);
  std::vector<int> vars = fv;
  q.evaluate = [arena, f, vars, mode, a](const Model& m, std::span<const int> tuple) {
    if (tuple.size() != vars.size())
      throw Error(ErrorCode::FreeVarMismatch, "tuple arity differs from the formula's");
    Env env;
    for (std::size_t i = 0; i < vars.size(); ++i) env.bind(vars[i], tuple[i]);
    const Elem v = Evaluator(m, *arena).eval(f, env);
    switch (mode) {
      case QueryMode::Models: return m.algebra().designated(v);
      case QueryMode::Ge: return m.algebra().leq(a, v);
      case QueryMode::Gt: return m.algebra().lt(a, v);
    }
    return false;
  };
  return q;
}

Query bot_connectivity_query() {
  Query q;
  q.name = "bot-connectivity";
  q.arity = 0;
  q.evaluate = [](const Model& m, std::span<const int>) {
    const GaifmanMetric metric = GaifmanMetric::strict_bot(m.algebra());
    const Adjacency g = gaifman_graph(m, metric);
    const int source[1] = {0};
    for (int d : distances_from(g, source))
      if (d == kInfiniteDistance) return false;
    return true;
  };
  return q;
}

Query transitive_closure_query(Elem t) {
  Query q;
  q.name = "t-transitive-closure";
  q.arity = 2;
  q.evaluate = [t](const Model& m, std::span<const int> tuple) {
    if (t < 0 || t >= m.algebra().size())
      throw Error(ErrorCode::InvalidThreshold, "threshold outside the carrier");
    std::vector<char> reached(static_cast<std::size_t>(m.domain_size()), 0);
    std::deque<int> queue{tuple[0]};
    reached[static_cast<std::size_t>(tuple[0])] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < m.domain_size(); ++y) {
        if (reached[static_cast<std::size_t>(y)]) continue;
        bool step = false;
        for (std::size_t ri = 0; ri < m.sig().relations().size() && !step; ++ri) {
          if (m.sig().relations()[ri].arity != 2) continue;
          const int xy[2] = {x, y};
          step = m.algebra().leq(t, m.value(static_cast<int>(ri), xy));
        }
        if (step) {
          reached[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
    return reached[static_cast<std::size_t>(tuple[1])] != 0;
  };
  return q;
}

QueryLocalityReport test_hanf_local(const Query& q, int r, const PairGenerator& generator,
                                    int trials) {
  QueryLocalityReport report;
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<PairSample> sample = generator(trial);
    if (!sample)
      throw Error(ErrorCode::GeneratorExhausted,
                  "pair generator ran dry after " + std::to_string(trial) + " trials");
    ++report.trials;
    if (static_cast<int>(sample->anchor.size()) != q.arity)
      throw Error(ErrorCode::FreeVarMismatch, "anchor arity differs from the query's");

    Model lm = sample->left;
    Model rm = sample->right;
    std::vector<int> lt, rt;
    if (!sample->anchor.empty()) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < sample->anchor.size(); ++i) {
        lt.push_back(sample->anchor[i].first);
        rt.push_back(sample->anchor[i].second);
        std::string name = "a" + std::to_string(i + 1);
        while (lm.sig().constant_id(name) || lm.sig().relation_id(name)) name += "'";
        names.push_back(name);
      }
      lm = lm.with_constants(lt, names);
      rm = rm.with_constants(rt, names);
    }
    if (!swap_check(lm, rm, r, sample->metric_override)) continue;
    ++report.applicable;

    const bool left_in = q.evaluate(sample->left, lt);
    const bool right_in = q.evaluate(sample->right, rt);
    if (left_in != right_in)
      report.violations.push_back({trial, lt, rt, left_in, right_in,
                                   std::make_shared<Model>(sample->left),
                                   std::make_shared<Model>(sample->right)});
  }
  return report;
}

QueryLocalityReport test_gaifman_local(const Query& q, int r, const GaifmanMetric& metric,
                                       const ModelGenerator& generator, int trials) {
  if (q.arity < 1) throw Error(ErrorCode::BadUsage, "Gaifman locality needs arity >= 1");
  QueryLocalityReport report;
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<Model> m = generator(trial);
    if (!m)
      throw Error(ErrorCode::GeneratorExhausted,
                  "model generator ran dry after " + std::to_string(trial) + " trials");
    ++report.trials;

    std::vector<std::vector<int>> tuples;
    std::vector<int> tuple(static_cast<std::size_t>(q.arity), 0);
    do tuples.push_back(tuple);
    while (next_tuple(tuple, m->domain_size()));

    std::vector<Sphere> spheres;
    spheres.reserve(tuples.size());
    for (const auto& tup : tuples) spheres.push_back(sphere(*m, metric, tup, r));
    std::vector<char> in_q(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) in_q[i] = q.evaluate(*m, tuples[i]) ? 1 : 0;

    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = i + 1; j < tuples.size(); ++j) {
        if (!same_sphere_type(spheres[i], spheres[j])) continue;
        ++report.applicable;
        if (in_q[i] != in_q[j]) {
          auto shared = std::make_shared<Model>(*m);
          report.violations.push_back(
              {trial, tuples[i], tuples[j], in_q[i] != 0, in_q[j] != 0, shared, shared});
        }
      }
  }
  return report;
}

}  // namespace reslat
