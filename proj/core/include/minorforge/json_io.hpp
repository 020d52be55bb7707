#ifndef MINORFORGE_JSON_IO_HPP
#define MINORFORGE_JSON_IO_HPP

#include <string>

#include "minorforge/covers.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/path_select.hpp"
#include "minorforge/pipelines.hpp"
#include "minorforge/verify.hpp"

// JSON report rendering. Every function returns a complete, pretty-printed
// document with lexicographically sorted keys, so equal inputs produce
// byte-identical output.

namespace minorforge {

inline constexpr const char* kVersion = "0.1.0";

// {"format": "branch_model", "host_n": n, "branches": [[...]],
//  "model_edges": [[i, j, multiplicity]]}. The host graph itself is not
// embedded; round-trips pair the document with its edge-list file.
std::string branch_model_to_json(const BranchModel& bm);

// Inverse of branch_model_to_json. Validates the document shape and that
// host_n matches; does not re-verify the minor (use verify_minor_model).
BranchModel branch_model_from_json(const std::string& text, const Graph& host);

std::string minor_report_to_json(const MinorReport& r);
std::string pipeline_report_to_json(const PipelineReport& r);
std::string activation_report_to_json(const ActivationBoundsReport& r);
std::string concentration_report_to_json(const ConcentrationReport& r);
std::string cover_result_to_json(const CoverResult& r);
std::string expansion_outcome_to_json(const ExpansionOutcome& r);
std::string path_claims_to_json(const PathClaimsReport& r);
std::string freeness_to_json(const FreenessCheck& r);
std::string kst_witness_to_json(const KstWitness& w);
std::string bipartite_cut_to_json(const BipartiteCut& c);

}  // namespace minorforge

#endif
