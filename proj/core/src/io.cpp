#include "reslat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reslat {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::BadDocument, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadDocument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Elem> read_matrix(const ordered_json& j, const std::string& key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorCode::BadDocument, "algebra document needs matrix '" + key + "'");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::BadDocument, "matrix '" + key + "' must be " + std::to_string(n) +
                                              " rows of " + std::to_string(n));
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::BadDocument, "matrix '" + key + "' entries must be indices");
      out.push_back(v.get<Elem>());
    }
  }
  if (out.size() != n * n)
    throw Error(ErrorCode::BadDocument, "matrix '" + key + "' has the wrong row count");
  return out;
}

ordered_json matrix_json(const std::vector<Elem>& m, std::size_t n) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(m[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ResiduatedLattice algebra_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadDocument, "algebra document must be an object");
  OperationTables t;
  if (!j.contains("labels") || !j["labels"].is_array())
    throw Error(ErrorCode::BadDocument, "algebra document needs 'labels'");
  for (const auto& l : j["labels"]) t.labels.push_back(l.get<std::string>());
  if (!j.contains("unit") || !j["unit"].is_number_integer())
    throw Error(ErrorCode::BadDocument, "algebra document needs integer 'unit'");
  t.unit = j["unit"].get<Elem>();
  const std::size_t n = t.labels.size();
  t.meet = read_matrix(j, "meet", n);
  t.join = read_matrix(j, "join", n);
  t.fuse = read_matrix(j, "fuse", n);
  t.lres = read_matrix(j, "lres", n);
  t.rres = read_matrix(j, "rres", n);
  return ResiduatedLattice::validate(std::move(t));
}

Model model_from_json(const ordered_json& j, const std::string& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::BadDocument, "model document must be an object");
  ModelData d;

  if (!j.contains("algebra")) throw Error(ErrorCode::BadDocument, "model needs 'algebra'");
  if (j["algebra"].is_string())
    d.algebra = std::make_shared<ResiduatedLattice>(
        algebra_from_json(parse_json(read_file(base_dir + "/" + j["algebra"].get<std::string>()))));
  else
    d.algebra = std::make_shared<ResiduatedLattice>(algebra_from_json(j["algebra"]));

  if (!j.contains("signature") || !j["signature"].is_object())
    throw Error(ErrorCode::BadDocument, "model needs 'signature'");
  std::vector<RelationSymbol> rels;
  if (j["signature"].contains("relations"))
    for (const auto& r : j["signature"]["relations"])
      rels.push_back({r.at("name").get<std::string>(), r.at("arity").get<int>()});
  std::vector<std::string> consts;
  if (j["signature"].contains("constants"))
    for (const auto& c : j["signature"]["constants"]) consts.push_back(c.get<std::string>());
  d.sig = Signature(std::move(rels), std::move(consts));

  if (!j.contains("domain_size") || !j["domain_size"].is_number_integer())
    throw Error(ErrorCode::BadDocument, "model needs integer 'domain_size'");
  d.domain_size = j["domain_size"].get<int>();

  auto label_to_elem = [&](const std::string& label) {
    auto e = d.algebra->element_of(label);
    if (!e) throw Error(ErrorCode::BadDocument, "no algebra element labelled '" + label + "'");
    return *e;
  };
  if (j.contains("eq_gap")) d.eq_gap = label_to_elem(j["eq_gap"].get<std::string>());

  if (j.contains("relations"))
    for (const auto& [name, vals] : j["relations"].items()) {
      std::vector<Elem> flat;
      for (const auto& v : vals) flat.push_back(label_to_elem(v.get<std::string>()));
      d.relations[name] = std::move(flat);
    }
  if (j.contains("constants"))
    for (const auto& [name, idx] : j["constants"].items()) d.constants[name] = idx.get<int>();

  return Model(std::move(d));
}

ordered_json algebra_to_json(const ResiduatedLattice& a) {
  const OperationTables& t = a.tables();
  const std::size_t n = t.labels.size();
  ordered_json j;
  j["labels"] = t.labels;
  j["unit"] = t.unit;
  j["meet"] = matrix_json(t.meet, n);
  j["join"] = matrix_json(t.join, n);
  j["fuse"] = matrix_json(t.fuse, n);
  j["lres"] = matrix_json(t.lres, n);
  j["rres"] = matrix_json(t.rres, n);
  return j;
}

ordered_json model_to_json(const Model& m) {
  ordered_json j;
  j["algebra"] = algebra_to_json(m.algebra());
  ordered_json rels = ordered_json::array();
  for (const auto& r : m.sig().relations()) rels.push_back({{"name", r.name}, {"arity", r.arity}});
  j["signature"] = {{"relations", rels}, {"constants", m.sig().constants()}};
  j["domain_size"] = m.domain_size();
  j["eq_gap"] = m.algebra().label(m.eq_gap());
  ordered_json rv;
  for (std::size_t ri = 0; ri < m.sig().relations().size(); ++ri) {
    ordered_json vals = ordered_json::array();
    for (Elem v : m.relation_values(static_cast<int>(ri))) vals.push_back(m.algebra().label(v));
    rv[m.sig().relations()[ri].name] = std::move(vals);
  }
  j["relations"] = std::move(rv);
  ordered_json cv;
  for (std::size_t ci = 0; ci < m.sig().constants().size(); ++ci)
    cv[m.sig().constants()[ci]] = m.constant(static_cast<int>(ci));
  j["constants"] = std::move(cv);
  return j;
}

}  // namespace

ResiduatedLattice load_algebra(const std::string& text) {
  return algebra_from_json(parse_json(text));
}

ResiduatedLattice load_algebra_file(const std::string& path) {
  return load_algebra(read_file(path));
}

std::string save_algebra(const ResiduatedLattice& a) { return algebra_to_json(a).dump(2) + "\n"; }

Model load_model(const std::string& text, const std::string& base_dir) {
  return model_from_json(parse_json(text), base_dir);
}

Model load_model_file(const std::string& path) {
  std::string dir = ".";
  if (const auto slash = path.find_last_of('/'); slash != std::string::npos)
    dir = path.substr(0, slash);
  return load_model(read_file(path), dir);
}

std::string save_model(const Model& m) { return model_to_json(m).dump(2) + "\n"; }

GaifmanMetric parse_metric(const std::string& spec, const ResiduatedLattice& algebra) {
  if (spec == "modelling") return GaifmanMetric::modelling();
  if (spec == "strict-bot") return GaifmanMetric::strict_bot(algebra);
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string label = spec.substr(colon + 1);
    const auto e = algebra.element_of(label);
    if (!e)
      throw Error(ErrorCode::InvalidThreshold, "no algebra element labelled '" + label + "'");
    if (kind == "ge") return GaifmanMetric::ge(*e);
    if (kind == "gt") return GaifmanMetric::gt(*e);
  }
  throw Error(ErrorCode::BadUsage,
              "metric spec must be 'modelling', 'strict-bot', 'ge:<label>' or 'gt:<label>'");
}

std::string hanf_report_to_json(const HanfReport& report, const Model& left, const Model& right) {
  ordered_json j;
  j["k"] = report.k;
  j["radii"] = report.radii;
  j["metric"] = report.metric.describe(left.algebra());
  j["nondefault_metric"] = report.nondefault_metric;
  j["max_sphere_size"] = report.max_sphere_size;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    const Model& rep = row.representative_model == 0 ? left : right;
    (void)rep;
    rows.push_back({{"radius", row.radius},
                    {"class", row.class_id},
                    {"representative_model", row.representative_model == 0 ? "left" : "right"},
                    {"representative_tuple", row.representative_tuple},
                    {"count_left", row.count_left},
                    {"count_right", row.count_right},
                    {"verdict", row.verdict == HanfVerdict::EqualCounts ? "equal-counts"
                                : row.verdict == HanfVerdict::BothLarge ? "both-large"
                                                                        : "fail"}});
  }
  j["classes"] = std::move(rows);
  j["premise"] = report.premise;
  return j.dump(2) + "\n";
}

std::string index_to_json(const SphereTypeIndex& index, const ResiduatedLattice& algebra) {
  ordered_json j;
  j["arity"] = index.arity;
  j["radius"] = index.radius;
  j["metric"] = index.metric.describe(algebra);
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < index.classes.size(); ++c)
    classes.push_back({{"class", c},
                       {"representative_model", index.classes[c].representative_model},
                       {"representative_tuple", index.classes[c].representative_tuple},
                       {"counts", index.classes[c].counts}});
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

std::string game_trace_to_json(const GameResult& result) {
  ordered_json j;
  j["k"] = result.k;
  j["equivalent"] = result.equivalent;
  ordered_json levels = ordered_json::array();
  for (std::size_t jj = 0; jj < result.trace.size(); ++jj) {
    ordered_json entries = ordered_json::array();
    for (const auto& piso : result.trace[jj]) {
      ordered_json pairs = ordered_json::array();
      for (const auto& [a, b] : piso) pairs.push_back({a, b});
      entries.push_back(std::move(pairs));
    }
    levels.push_back({{"rounds_remaining", jj}, {"partial_isomorphisms", std::move(entries)}});
  }
  j["back_and_forth_system"] = std::move(levels);
  return j.dump(2) + "\n";
}

std::string locality_report_to_json(const QueryLocalityReport& report, long long seed) {
  ordered_json j;
  if (seed >= 0) j["seed"] = seed;
  j["trials"] = report.trials;
  j["applicable"] = report.applicable;
  ordered_json vs = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json entry{{"trial", v.trial},
                       {"left_tuple", v.left_tuple},
                       {"right_tuple", v.right_tuple},
                       {"left_in", v.left_in},
                       {"right_in", v.right_in}};
    if (v.left_model) entry["left_model"] = ordered_json::parse(save_model(*v.left_model));
    if (v.right_model && v.right_model != v.left_model)
      entry["right_model"] = ordered_json::parse(save_model(*v.right_model));
    vs.push_back(std::move(entry));
  }
  j["violations"] = std::move(vs);
  return j.dump(2) + "\n";
}

std::string distinguish_result_to_json(const DistinguishResult& result, const Arena& arena) {
  ordered_json j;
  j["found"] = result.sentence.has_value();
  if (result.sentence) {
    j["sentence"] = arena.print(*result.sentence);
    j["left_models"] = result.left_models;
    j["right_models"] = result.right_models;
    j["scatter"] = result.scatter;
    j["source_model"] = result.source_model == 0 ? "left" : "right";
    j["source_element"] = result.source_element;
  }
  return j.dump(2) + "\n";
}

}  // namespace reslat
