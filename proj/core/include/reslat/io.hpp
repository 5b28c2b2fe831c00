#pragma once

#include <string>

#include "reslat/gaifman.hpp"
#include "reslat/hanf.hpp"
#include "reslat/model.hpp"
#include "reslat/queries.hpp"

namespace reslat {

/// Algebra document: {"labels": [..], "unit": i, "meet"/"join"/"fuse"/
/// "lres"/"rres": row-major matrices of element indices}. Bit-exact,
/// index-based.
ResiduatedLattice load_algebra(const std::string& json_text);
ResiduatedLattice load_algebra_file(const std::string& path);
std::string save_algebra(const ResiduatedLattice& algebra);

/// Model document: {"algebra": inline object or file-reference string,
/// "signature": {"relations": [{"name","arity"}..], "constants": [..]},
/// "domain_size": n, "eq_gap": value label (optional; defaults to bottom),
/// "relations": name -> flat row-major array of value labels,
/// "constants": name -> element index}.
Model load_model(const std::string& json_text, const std::string& base_dir = ".");
Model load_model_file(const std::string& path);
std::string save_model(const Model& model);

/// Metric specs: "modelling", "ge:<label>", "gt:<label>", "strict-bot".
GaifmanMetric parse_metric(const std::string& spec, const ResiduatedLattice& algebra);

// Report serializers (deterministic key order, 2-space indent).
std::string hanf_report_to_json(const HanfReport& report, const Model& left, const Model& right);
std::string index_to_json(const SphereTypeIndex& index, const ResiduatedLattice& algebra);
std::string game_trace_to_json(const GameResult& result);
std::string locality_report_to_json(const QueryLocalityReport& report,
                                    long long seed = -1);
std::string distinguish_result_to_json(const DistinguishResult& result, const Arena& arena);

}  // namespace reslat
