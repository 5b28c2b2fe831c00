#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reslat/enumerate.hpp"
#include "reslat/gaifman.hpp"
#include "reslat/games.hpp"
#include "reslat/harness.hpp"
#include "reslat/io.hpp"
#include "reslat/isotypes.hpp"
#include "reslat/parser.hpp"
#include "reslat/queries.hpp"
#include "reslat/repro.hpp"

namespace {

using namespace reslat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

bool g_json = false;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::BadUsage, "pair list entries look like '0:1'");
    out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return out;
}

Env parse_env(Arena& arena, const std::string& text) {
  Env env;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::BadUsage, "environment entries look like 'x=0'");
    env.bind(arena.var(item.substr(0, eq)), std::stoi(item.substr(eq + 1)));
  }
  return env;
}

AlgebraPtr shared_algebra(const Model& m) { return m.algebra_ptr(); }

int cmd_validate_algebra(const std::string& path) {
  try {
    const ResiduatedLattice a = load_algebra_file(path);
    const AlgebraFlags& f = a.flags();
    if (g_json) {
      ordered_json j;
      j["valid"] = true;
      j["carrier_size"] = a.size();
      j["unit"] = a.label(a.unit());
      j["is_chain"] = f.is_chain;
      j["well_connected"] = f.well_connected;
      j["bot"] = f.bot ? ordered_json(a.label(*f.bot)) : ordered_json(nullptr);
      j["top"] = f.top ? ordered_json(a.label(*f.top)) : ordered_json(nullptr);
      j["co_atom"] = f.co_atom ? ordered_json(a.label(*f.co_atom)) : ordered_json(nullptr);
      j["has_zero_divisors"] =
          f.has_zero_divisors ? ordered_json(*f.has_zero_divisors) : ordered_json("n/a");
      ordered_json up = ordered_json::array();
      for (Elem e : f.up_set_of_unit) up.push_back(a.label(e));
      j["up_set_of_unit"] = up;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "valid residuated lattice on " << a.size() << " elements\n";
      std::cout << "unit: " << a.label(a.unit()) << "\n";
      std::cout << "chain: " << (f.is_chain ? "yes" : "no") << "\n";
      std::cout << "well-connected: " << (f.well_connected ? "yes" : "no") << "\n";
      std::cout << "bot: " << (f.bot ? a.label(*f.bot) : "-") << "\n";
      std::cout << "top: " << (f.top ? a.label(*f.top) : "-") << "\n";
      std::cout << "co-atom: " << (f.co_atom ? a.label(*f.co_atom) : "-") << "\n";
      std::cout << "zero divisors: "
                << (f.has_zero_divisors ? (*f.has_zero_divisors ? "yes" : "no") : "n/a") << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_eval(const std::string& model_path, const std::string& formula, const std::string& env_s) {
  const Model m = load_model_file(model_path);
  Arena arena(m.sig(), shared_algebra(m));
  const Formula f = parse(arena, formula);
  Env env = parse_env(arena, env_s);
  const Elem v = Evaluator(m, arena).eval(f, env);
  if (g_json) {
    ordered_json j;
    j["value"] = m.algebra().label(v);
    j["designated"] = m.algebra().designated(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << m.algebra().label(v) << "\n";
  }
  return kExitOk;
}

int cmd_equiv(const std::string& left, const std::string& right, int k, const std::string& anchor,
              bool trace) {
  const Model m = load_model_file(left);
  const Model n = load_model_file(right);
  const auto pairs = parse_pair_list(anchor);
  const GameResult r = k_equivalent(m, n, k, pairs, trace);
  if (g_json || trace) {
    std::cout << game_trace_to_json(r);
  } else {
    std::cout << (r.equivalent ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_isotype(const std::string& model_path, const std::string& anchor, int k,
                std::size_t node_cap) {
  const Model m = load_model_file(model_path);
  Arena arena(m.sig(), shared_algebra(m));
  const auto tuple = parse_int_list(anchor);
  const Isotype t = build_isotype(arena, m, tuple, k, node_cap);
  if (g_json) {
    ordered_json j;
    j["rank"] = t.rank;
    j["anchor"] = t.anchor;
    j["formula"] = arena.print(t.formula);
    j["qd"] = arena.qd(t.formula);
    j["dag_size"] = arena.dag_size(t.formula);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << arena.print(t.formula) << "\n";
  }
  return kExitOk;
}

int cmd_spheres(const std::string& model_path, const std::string& right_path,
                const std::string& metric_s, int radius, const std::string& center, int arity) {
  const Model m = load_model_file(model_path);
  const GaifmanMetric metric = parse_metric(metric_s, m.algebra());
  if (!center.empty()) {
    const Sphere s = sphere(m, metric, parse_int_list(center), radius);
    if (g_json) {
      ordered_json j;
      j["elements"] = s.elements;
      j["pointed_model"] = ordered_json::parse(save_model(s.pointed_model()));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "sphere elements:";
      for (int e : s.elements) std::cout << " " << e;
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::vector<Model> models{m};
  if (!right_path.empty()) models.push_back(load_model_file(right_path));
  std::vector<const Model*> ptrs;
  for (const Model& x : models) ptrs.push_back(&x);
  const SphereTypeIndex index = sphere_type_index(ptrs, metric, radius, arity);
  std::cout << index_to_json(index, m.algebra());
  return kExitOk;
}

int cmd_hanf(const std::string& left, const std::string& right, int k, const std::string& metric_s,
             bool verify, int trials, long long seed, bool has_seed) {
  const Model m = load_model_file(left);
  if (verify) {
    if (!has_seed) throw Error(ErrorCode::BadUsage, "--verify needs an explicit --seed");
    const AlgebraPtr algebra = shared_algebra(m);
    const auto gen = [&](int trial) -> std::optional<PairSample> {
      return block_shuffle_pair(algebra, static_cast<std::uint64_t>(seed), trial, k);
    };
    const HanfHarnessReport report = verify_hanf_theorem(gen, k, trials);
    std::cout << "trials: " << report.trials_run << ", premise-true: " << report.applicable
              << ", violations: " << report.violations.size() << "\n";
    return report.violations.empty() ? kExitOk : kExitViolation;
  }
  const Model n = load_model_file(right);
  std::optional<GaifmanMetric> metric;
  if (!metric_s.empty()) metric = parse_metric(metric_s, m.algebra());
  const HanfReport report = hanf_check(m, n, k, metric);
  if (g_json) {
    std::cout << hanf_report_to_json(report, m, n);
  } else {
    if (report.nondefault_metric)
      std::cout << "warning: non-default metric " << report.metric.describe(m.algebra())
                << " (the theorem is stated for strict-bot)\n";
    std::cout << "e (max sphere size at r_k): " << report.max_sphere_size << "\n";
    for (const auto& row : report.rows)
      std::cout << "r=" << row.radius << " class=" << row.class_id
                << " counts=" << row.count_left << "/" << row.count_right << " "
                << (row.verdict == HanfVerdict::EqualCounts  ? "equal-counts"
                    : row.verdict == HanfVerdict::BothLarge ? "both-large"
                                                            : "FAIL")
                << "\n";
    std::cout << "premise: " << (report.premise ? "satisfied" : "violated") << "\n";
  }
  return kExitOk;
}

int cmd_swap(const std::string& left, const std::string& right, int r,
             const std::string& metric_s) {
  const Model m = load_model_file(left);
  const Model n = load_model_file(right);
  std::optional<GaifmanMetric> metric;
  if (!metric_s.empty()) metric = parse_metric(metric_s, m.algebra());
  std::cout << (swap_check(m, n, r, metric) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_theta(const std::string& model_path, int r) {
  const Model m = load_model_file(model_path);
  Arena arena(m.sig(), shared_algebra(m));
  const Formula f = theta(arena, r, arena.v("x"), arena.v("y"));
  std::cout << arena.print(f) << "\n";
  return kExitOk;
}

int cmd_relativize(const std::string& model_path, const std::string& formula, int r,
                   const std::string& anchor_vars, const std::string& metric_s) {
  const Model m = load_model_file(model_path);
  Arena arena(m.sig(), shared_algebra(m));
  const Formula f = parse(arena, formula);
  const DistanceEncoding enc(m.algebra(), parse_metric(metric_s, m.algebra()));
  std::vector<Term> anchors;
  std::stringstream ss(anchor_vars);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) anchors.push_back(arena.v(item));
  std::cout << arena.print(relativize(arena, f, r, anchors, enc)) << "\n";
  return kExitOk;
}

int cmd_distinguish(const std::string& left, const std::string& right, const std::string& metric_s,
                    int r, int q, int scatter_max) {
  const Model m = load_model_file(left);
  const Model n = load_model_file(right);
  Arena arena(m.sig(), shared_algebra(m));
  const DistinguishResult res =
      distinguish(arena, m, n, parse_metric(metric_s, m.algebra()), r, q, scatter_max);
  if (g_json) {
    std::cout << distinguish_result_to_json(res, arena);
  } else if (res.sentence) {
    std::cout << "separating sentence: " << arena.print(*res.sentence) << "\n";
    std::cout << "left models it: " << (res.left_models ? "yes" : "no")
              << ", right models it: " << (res.right_models ? "yes" : "no") << "\n";
  } else {
    std::cout << "none\n";
  }
  return kExitOk;
}

int cmd_query(const std::string& model_path, const std::string& name, const std::string& formula,
              const std::string& mode_s, const std::string& tuple_s, const std::string& test,
              int radius, int trials, long long seed, bool has_seed, const std::string& metric_s) {
  const Model m = load_model_file(model_path);
  const AlgebraPtr algebra = shared_algebra(m);

  Query q;
  std::shared_ptr<Arena> arena;
  if (!name.empty()) {
    if (name == "bot-connectivity") {
      q = bot_connectivity_query();
    } else if (name.rfind("tc:", 0) == 0) {
      const auto e = m.algebra().element_of(name.substr(3));
      if (!e) throw Error(ErrorCode::InvalidThreshold, "unknown threshold label");
      q = transitive_closure_query(*e);
    } else {
      throw Error(ErrorCode::BadUsage, "query names: bot-connectivity, tc:<label>");
    }
  } else if (!formula.empty()) {
    arena = std::make_shared<Arena>(m.sig(), algebra);
    const Formula f = parse(*arena, formula);
    QueryMode mode = QueryMode::Models;
    Elem a = -1;
    if (mode_s == "models" || mode_s.empty()) {
      mode = QueryMode::Models;
    } else if (mode_s.rfind("ge:", 0) == 0 || mode_s.rfind("gt:", 0) == 0) {
      const auto e = m.algebra().element_of(mode_s.substr(3));
      if (!e) throw Error(ErrorCode::InvalidThreshold, "unknown comparison label");
      a = *e;
      mode = mode_s[1] == 'e' ? QueryMode::Ge : QueryMode::Gt;
    } else {
      throw Error(ErrorCode::BadUsage, "--mode is models, ge:<label> or gt:<label>");
    }
    q = definable_query(arena, f, mode, a);
  } else {
    throw Error(ErrorCode::BadUsage, "query needs --name or --formula");
  }

  if (test.empty()) {
    const auto tuple = parse_int_list(tuple_s);
    std::cout << (q.evaluate(m, tuple) ? (q.arity == 0 ? "1" : "in") : (q.arity == 0 ? "0" : "out"))
              << "\n";
    return kExitOk;
  }

  if (!has_seed) throw Error(ErrorCode::BadUsage, "--test needs an explicit --seed");
  QueryLocalityReport report;
  if (test == "hanf") {
    const auto gen = [&](int trial) -> std::optional<PairSample> {
      PairSample s{random_graph_model(algebra, static_cast<std::uint64_t>(seed), 2 * trial, 2, 5),
                   random_graph_model(algebra, static_cast<std::uint64_t>(seed), 2 * trial + 1, 2, 5),
                   {},
                   std::nullopt};
      auto rng = std::mt19937_64(static_cast<std::uint64_t>(seed) + trial);
      for (int i = 0; i < q.arity; ++i)
        s.anchor.emplace_back(uniform_int(rng, s.left.domain_size()),
                              uniform_int(rng, s.right.domain_size()));
      return s;
    };
    report = test_hanf_local(q, radius, gen, trials);
  } else if (test == "gaifman") {
    const GaifmanMetric metric = metric_s.empty() ? GaifmanMetric::strict_bot(m.algebra())
                                                  : parse_metric(metric_s, m.algebra());
    const auto gen = [&](int trial) -> std::optional<Model> {
      return random_graph_model(algebra, static_cast<std::uint64_t>(seed), trial, 2, 5);
    };
    report = test_gaifman_local(q, radius, metric, gen, trials);
  } else {
    throw Error(ErrorCode::BadUsage, "--test is hanf or gaifman");
  }
  std::cout << locality_report_to_json(report, seed);
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_repro(const std::string& id, bool list) {
  if (list) {
    for (const auto& r : repro_ids()) std::cout << r << "\n";
    return kExitOk;
  }
  const ReproOutcome outcome = run_repro(id);
  std::cout << outcome.text;
  if (!outcome.ok) {
    std::cerr << "reproduction FAILED: an expected outcome did not hold\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite model theory over finite residuated lattices"};
  app.require_subcommand(1);

  std::string format = "text";
  if (const char* env = std::getenv("RESLAT_FORMAT")) format = env;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string algebra_path, model_path, left_path, right_path;
  std::string formula, env_s, anchor, center, metric_s, anchor_vars, tuple_s, name, mode_s, test,
      repro_id;
  int k = 0, radius = 0, arity = 1, rank = 0, scatter_max = 2, trials = 20;
  long long seed = 0;
  std::size_t node_cap = 2'000'000;
  bool trace = false, verify = false, list = false;

  auto* validate = app.add_subcommand("validate-algebra", "check every law of an algebra document");
  validate->add_option("--algebra", algebra_path)->required();

  auto* ev = app.add_subcommand("eval", "evaluate a formula on a model");
  ev->add_option("--model", model_path)->required();
  ev->add_option("--formula", formula)->required();
  ev->add_option("--env", env_s, "variable bindings, e.g. x=0,y=1");

  auto* eq = app.add_subcommand("equiv", "k-round back-and-forth equivalence");
  eq->add_option("--left", left_path)->required();
  eq->add_option("--right", right_path)->required();
  eq->add_option("-k,--rounds", k)->required();
  eq->add_option("--anchor", anchor, "aligned pairs, e.g. 0:0,1:2");
  eq->add_flag("--trace", trace, "emit the witnessing back-and-forth system as JSON");

  auto* iso = app.add_subcommand("isotype", "emit the k-isomorphism-type formula of an anchor");
  iso->add_option("--model", model_path)->required();
  iso->add_option("--anchor", anchor);
  iso->add_option("-k,--rank", k)->required();
  iso->add_option("--node-cap", node_cap);

  auto* sp = app.add_subcommand("spheres", "spheres and sphere-type indexes");
  sp->add_option("--model", model_path)->required();
  sp->add_option("--right", right_path, "second model for a joint index");
  sp->add_option("--metric", metric_s)->required();
  sp->add_option("-r,--radius", radius)->required();
  sp->add_option("--center", center, "center tuple, e.g. 0,1");
  sp->add_option("--arity", arity, "index all tuples of this arity");

  auto* ha = app.add_subcommand("hanf", "Hanf premise check or theorem harness");
  ha->add_option("--left", left_path)->required();
  ha->add_option("--right", right_path);
  ha->add_option("-k,--rounds", k)->required();
  ha->add_option("--metric", metric_s, "override the strict-bot default");
  ha->add_flag("--verify", verify, "run the seeded theorem harness instead");
  ha->add_option("--trials", trials);
  auto* ha_seed = ha->add_option("--seed", seed);

  auto* sw = app.add_subcommand("swap", "equal sphere-type counts at a radius");
  sw->add_option("--left", left_path)->required();
  sw->add_option("--right", right_path)->required();
  sw->add_option("-r,--radius", radius)->required();
  sw->add_option("--metric", metric_s);

  auto* th = app.add_subcommand("theta", "emit the distance formula theta_r(x,y)");
  th->add_option("--model", model_path)->required();
  th->add_option("-r,--radius", radius)->required();

  auto* rel = app.add_subcommand("relativize", "bound a formula's quantifiers to a neighborhood");
  rel->add_option("--model", model_path)->required();
  rel->add_option("--formula", formula)->required();
  rel->add_option("-r,--radius", radius)->required();
  rel->add_option("--anchor-vars", anchor_vars)->required();
  rel->add_option("--metric", metric_s)->required();

  auto* di = app.add_subcommand("distinguish", "search for a separating basic local sentence");
  di->add_option("--left", left_path)->required();
  di->add_option("--right", right_path)->required();
  di->add_option("--metric", metric_s)->required();
  di->add_option("-r,--radius", radius)->required();
  di->add_option("-q,--rank", rank)->required();
  di->add_option("--scatter-max", scatter_max);

  auto* qu = app.add_subcommand("query", "evaluate or locality-test a query");
  qu->add_option("--model", model_path)->required();
  qu->add_option("--name", name, "bot-connectivity or tc:<label>");
  qu->add_option("--formula", formula);
  qu->add_option("--mode", mode_s, "models, ge:<label> or gt:<label>");
  qu->add_option("--tuple", tuple_s);
  qu->add_option("--test", test, "hanf or gaifman");
  qu->add_option("-r,--radius", radius);
  qu->add_option("--trials", trials);
  auto* qu_seed = qu->add_option("--seed", seed);
  qu->add_option("--metric", metric_s);

  auto* rp = app.add_subcommand("repro", "run a built-in case study");
  rp->add_option("id", repro_id);
  rp->add_flag("--list", list);

  CLI11_PARSE(app, argc, argv);
  g_json = format == "json";

  try {
    if (*validate) return cmd_validate_algebra(algebra_path);
    if (*ev) return cmd_eval(model_path, formula, env_s);
    if (*eq) return cmd_equiv(left_path, right_path, k, anchor, trace);
    if (*iso) return cmd_isotype(model_path, anchor, k, node_cap);
    if (*sp) return cmd_spheres(model_path, right_path, metric_s, radius, center, arity);
    if (*ha)
      return cmd_hanf(left_path, right_path, k, metric_s, verify, trials, seed,
                      ha_seed->count() > 0);
    if (*sw) return cmd_swap(left_path, right_path, radius, metric_s);
    if (*th) return cmd_theta(model_path, radius);
    if (*rel) return cmd_relativize(model_path, formula, radius, anchor_vars, metric_s);
    if (*di) return cmd_distinguish(left_path, right_path, metric_s, radius, rank, scatter_max);
    if (*qu)
      return cmd_query(model_path, name, formula, mode_s, tuple_s, test, radius, trials, seed,
                       qu_seed->count() > 0, metric_s);
    if (*rp) return cmd_repro(repro_id, list);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
