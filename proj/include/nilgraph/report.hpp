#pragma once

#include <json.hpp>

#include <string>

#include "nilgraph/algebra.hpp"
#include "nilgraph/census.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/spectra.hpp"
#include "nilgraph/verify.hpp"

namespace nilgraph {

using Json = nlohmann::ordered_json;

// Full algebra report for one graph. Rationals appear as strings.
Json info_report(const LabeledDigraph& g);

Json verdict_report(const NilAlgebra& a, const SingularityVerdict& v,
                    std::size_t expansion_bound = kDefaultExpansionBound);

// {classes: [[vertex, ...], ...], xi: [[[coeff, vertex], ...], ...]}.
Json schreier_report(const LabeledDigraph& g);

Json verify_report(const VerifyReport& r);

Json census_row_report(const CensusRow& row);

// Family spec documents, e.g.
//   {"family": "star", "multiplicities": [3,2,1], "delta": [[1,-1,1],[1,-1],[1]]}
//   {"family": "cycle", "orientation": [1,1,1,-1], "labels": ["Z1","Z1","Z1","Z1"]}
//   {"family": "double_star", "first": {...}, "second": {...},
//    "bridge_label": "Z1", "bridge_dir": 1}
//   {"family": "path", "n": 5, "label": "Z1", "directions": [1,1,-1,1]}
// Throws SpecError.
LabeledDigraph graph_from_spec(const Json& spec);
StarSpec star_spec_from_json(const Json& spec, const std::string& default_prefix = "v");

}  // namespace nilgraph
