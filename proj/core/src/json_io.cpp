#include "minorforge/json_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace minorforge {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2); }

const char* status_name(BoundCheck::Status s) {
  switch (s) {
    case BoundCheck::pass: return "pass";
    case BoundCheck::fail: return "fail";
    default: return "skipped";
  }
}

const char* status_name(FreenessCheck::Status s) {
  switch (s) {
    case FreenessCheck::verified_free: return "verified_free";
    case FreenessCheck::counterexample: return "counterexample";
    default: return "skipped";
  }
}

json to_obj(const Estimate& e) {
  return {{"value", e.value}, {"trials", e.trials}, {"std_err", e.std_err}};
}

json to_obj(const BoundCheck& c) {
  return {{"status", status_name(c.status)},
          {"bound", c.bound},
          {"estimate", to_obj(c.estimate)},
          {"detail", c.detail}};
}

json to_obj(const Path3& p) { return json::array({p.v, p.x, p.y, p.u}); }

}  // namespace

std::string branch_model_to_json(const BranchModel& bm) {
  json edges = json::array();
  for (const auto& [key, m] : bm.model.edges)
    edges.push_back(json::array({key.first, key.second, m}));
  json j{{"format", "branch_model"},
         {"version", kVersion},
         {"host_n", bm.host.n},
         {"branches", bm.branches},
         {"model_edges", edges}};
  return dump(j);
}

BranchModel branch_model_from_json(const std::string& text, const Graph& host) {
  json j = json::parse(text);
  if (!j.is_object() || j.value("format", "") != "branch_model")
    throw std::runtime_error("branch model document: missing format tag");
  if (!j.contains("host_n") || !j["host_n"].is_number_integer())
    throw std::runtime_error("branch model document: missing host_n");
  if (j["host_n"].get<int>() != host.n)
    throw std::runtime_error("branch model document: host_n does not match the host graph");
  BranchModel bm;
  bm.host = host;
  if (!j.contains("branches") || !j["branches"].is_array())
    throw std::runtime_error("branch model document: missing branches array");
  for (const auto& b : j["branches"]) {
    if (!b.is_array()) throw std::runtime_error("branch model document: branch is not an array");
    bm.branches.push_back(b.get<std::vector<int>>());
  }
  bm.model.n = static_cast<int>(bm.branches.size());
  if (!j.contains("model_edges") || !j["model_edges"].is_array())
    throw std::runtime_error("branch model document: missing model_edges array");
  for (const auto& e : j["model_edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::runtime_error("branch model document: model edge is not [i, j, multiplicity]");
    bm.model.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long>());
  }
  return bm;
}

std::string minor_report_to_json(const MinorReport& r) {
  return dump(json{{"valid", r.valid()}, {"violations", r.violations}});
}

std::string pipeline_report_to_json(const PipelineReport& r) {
  json hist = json::array();
  for (const auto& [size, count] : r.parallel_histogram)
    hist.push_back(json::array({size, count}));
  json j{{"n", r.n},
         {"edges", r.edges},
         {"s", r.s},
         {"t", r.t},
         {"eps", r.eps},
         {"d_used", r.d_used},
         {"p", r.p},
         {"p_clamped", r.p_clamped},
         {"seed", r.seed},
         {"trials", r.trials},
         {"freeness", status_name(r.freeness)},
         {"almost_regular", r.almost_regular},
         {"models_valid", r.models_valid},
         {"histogram_ok", r.histogram_ok},
         {"clique_complete", r.clique_complete},
         {"best_trial", r.best_trial},
         {"activated_count", r.activated_count},
         {"pruned_6cycles", r.pruned_6cycles},
         {"pruned_stars", r.pruned_stars},
         {"parallel_histogram", hist},
         {"minor_order", r.minor_order},
         {"avg_degree_of_minor", r.avg_degree_of_minor},
         {"clique_minor_order", r.clique_minor_order},
         {"mean_activated", r.mean_activated},
         {"mean_minor_order", r.mean_minor_order},
         {"mean_avg_degree", r.mean_avg_degree},
         {"mean_clique_order", r.mean_clique_order},
         {"hist_max_overall", r.hist_max_overall},
         {"trim_threshold", r.trim_threshold},
         {"trimmed_vertices", r.trimmed_vertices},
         {"verification_ok", r.verification_ok()}};
  return dump(j);
}

std::string activation_report_to_json(const ActivationBoundsReport& r) {
  json paths = json::array();
  for (const Path3& p : r.sampled_paths) paths.push_back(to_obj(p));
  json lower = json::array();
  for (const BoundCheck& c : r.lower) lower.push_back(to_obj(c));
  json pair = json::array();
  for (const Path3& p : r.pair) pair.push_back(to_obj(p));
  json j{{"sampled_paths", paths},
         {"lower", lower},
         {"pair", pair},
         {"upper", to_obj(r.upper)},
         {"any_fail", r.any_fail()}};
  return dump(j);
}

std::string concentration_report_to_json(const ConcentrationReport& r) {
  json j{{"freq_above", to_obj(r.freq_above)},
         {"bound", r.bound},
         {"status", status_name(r.status)}};
  return dump(j);
}

std::string cover_result_to_json(const CoverResult& r) {
  return dump(json{{"sets", r.sets}, {"covered", r.covered}, {"budget", r.budget}});
}

std::string expansion_outcome_to_json(const ExpansionOutcome& r) {
  json cert{{"d", r.certificate.d},
            {"eps", r.certificate.eps},
            {"sets_examined", r.certificate.sets_examined},
            {"best_ratio", r.certificate.best_ratio},
            {"heuristic", r.certificate.heuristic},
            {"d_prime", r.certificate.d_prime()}};
  json j{{"found_set", r.found_set},
         {"independent_set", r.independent_set},
         {"target", r.target},
         {"rounds", r.rounds},
         {"certificate", cert}};
  return dump(j);
}

std::string path_claims_to_json(const PathClaimsReport& r) {
  json j{{"star_structure", r.star_structure},
         {"star_detail", r.star_detail},
         {"multiplicity", r.multiplicity},
         {"max_pair_multiplicity", r.max_pair_multiplicity},
         {"middle_degree", r.middle_degree},
         {"max_middle_degree", r.max_middle_degree},
         {"degree_bound", r.degree_bound},
         {"size_checked", r.size_checked},
         {"per_anchor_size", r.per_anchor_size},
         {"total_size", r.total_size},
         {"structural_ok", r.structural_ok()}};
  return dump(j);
}

std::string freeness_to_json(const FreenessCheck& r) {
  return dump(json{{"status", status_name(r.status)}, {"witness", r.witness}});
}

std::string kst_witness_to_json(const KstWitness& w) {
  return dump(json{{"left", w.left}, {"right", w.right}});
}

std::string bipartite_cut_to_json(const BipartiteCut& c) {
  return dump(json{{"side", c.side},
                   {"cut_edges", c.cut_graph.edge_count()},
                   {"n", c.cut_graph.n}});
}

}  // namespace minorforge
