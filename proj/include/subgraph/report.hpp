#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "subgraph/theorem.hpp"

namespace subgraph {

// Everything the analyze command reports for one group. Serializes to a
// versioned JSON document with stable key order; unknown fields are ignored
// on read.
struct AnalysisDocument {
  int schema = 1;
  std::string label;
  int order = 0;
  std::vector<std::pair<int, int>> subgroup_inventory;  // (order, count), orders ascending
  std::vector<std::pair<int, int>> alpha_by_prime;      // (p, alpha_p)
  int alpha = 0;
  std::vector<int> degree_sequence;                     // sorted
  std::vector<std::array<int, 3>> delta;                // (delta1, delta2, delta) per vertex
  bool regular = false;
  bool predicted = false;
  std::vector<ClaimResult> claims;

  bool operator==(const AnalysisDocument&) const = default;
};

AnalysisDocument make_analysis_document(const Lattice& lat, const RegularityReport& rep,
                                        const ClaimReport& claims, bool predicted);

nlohmann::ordered_json analysis_to_json(const AnalysisDocument& doc);
AnalysisDocument analysis_from_json(const nlohmann::json& j);

void write_analysis_json(const AnalysisDocument& doc, const std::string& path);
AnalysisDocument read_analysis_json(const std::string& path);

// One JSON object per census row, in corpus order, one per line.
std::string census_jsonl(const CensusVerdict& verdict);

std::string census_summary(const CensusVerdict& verdict);

}  // namespace subgraph
