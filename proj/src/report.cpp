#include "subgraph/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "subgraph/error.hpp"

namespace subgraph {

using nlohmann::json;
using nlohmann::ordered_json;

AnalysisDocument make_analysis_document(const Lattice& lat, const RegularityReport& rep,
                                        const ClaimReport& claims, bool predicted) {
  AnalysisDocument doc;
  doc.label = lat.group_label;
  doc.order = lat.group_order;
  for (const auto& s : lat.vertices) {
    if (!doc.subgroup_inventory.empty() && doc.subgroup_inventory.back().first == s.order)
      ++doc.subgroup_inventory.back().second;
    else
      doc.subgroup_inventory.emplace_back(s.order, 1);  // vertices sorted by order
  }
  doc.alpha_by_prime = rep.alpha_by_prime;
  doc.alpha = rep.alpha;
  doc.degree_sequence = rep.degree_sequence;
  for (std::size_t v = 0; v < lat.vertices.size(); ++v)
    doc.delta.push_back({lat.deg1[v], lat.deg2[v], lat.deg1[v] + lat.deg2[v]});
  doc.regular = rep.is_regular;
  doc.predicted = predicted;
  doc.claims = claims.entries;
  return doc;
}

namespace {

ordered_json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  ordered_json arr = ordered_json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

std::vector<std::pair<int, int>> pairs_from_json(const json& arr) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : arr) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

ordered_json claims_to_json(const std::vector<ClaimResult>& claims) {
  ordered_json obj = ordered_json::object();
  ordered_json witnesses = ordered_json::object();
  for (const auto& c : claims) {
    obj[c.name] = to_string(c.status);
    if (!c.witness.empty()) witnesses[c.name] = c.witness;
  }
  ordered_json out = ordered_json::object();
  out["status"] = std::move(obj);
  if (!witnesses.empty()) out["witnesses"] = std::move(witnesses);
  return out;
}

ClaimStatus claim_status_from_string(const std::string& s) {
  if (s == "holds") return ClaimStatus::Holds;
  if (s == "fails-with-witness") return ClaimStatus::FailsWithWitness;
  if (s == "not-applicable") return ClaimStatus::NotApplicable;
  throw ParseError("unknown claim status \"" + s + "\"");
}

std::vector<ClaimResult> claims_from_json(const json& j) {
  std::vector<ClaimResult> out;
  for (const auto& [name, status] : j.at("status").items()) {
    ClaimResult c{name, claim_status_from_string(status.get<std::string>()), ""};
    if (j.contains("witnesses") && j.at("witnesses").contains(name))
      c.witness = j.at("witnesses").at(name).get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ordered_json analysis_to_json(const AnalysisDocument& doc) {
  ordered_json j;
  j["schema"] = doc.schema;
  j["label"] = doc.label;
  j["order"] = doc.order;
  j["subgroup_inventory"] = pairs_to_json(doc.subgroup_inventory);
  j["alpha_by_prime"] = pairs_to_json(doc.alpha_by_prime);
  j["alpha"] = doc.alpha;
  j["degree_sequence"] = doc.degree_sequence;
  ordered_json delta = ordered_json::array();
  for (const auto& d : doc.delta) delta.push_back({d[0], d[1], d[2]});
  j["delta"] = std::move(delta);
  j["regular"] = doc.regular;
  j["predicted"] = doc.predicted;
  j["claims"] = claims_to_json(doc.claims);
  return j;
}

AnalysisDocument analysis_from_json(const json& j) {
  AnalysisDocument doc;
  doc.schema = j.at("schema").get<int>();
  doc.label = j.at("label").get<std::string>();
  doc.order = j.at("order").get<int>();
  doc.subgroup_inventory = pairs_from_json(j.at("subgroup_inventory"));
  doc.alpha_by_prime = pairs_from_json(j.at("alpha_by_prime"));
  doc.alpha = j.at("alpha").get<int>();
  doc.degree_sequence = j.at("degree_sequence").get<std::vector<int>>();
  for (const auto& d : j.at("delta"))
    doc.delta.push_back({d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()});
  doc.regular = j.at("regular").get<bool>();
  doc.predicted = j.at("predicted").get<bool>();
  doc.claims = claims_from_json(j.at("claims"));
  return doc;
}

void write_analysis_json(const AnalysisDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << analysis_to_json(doc).dump(2) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

AnalysisDocument read_analysis_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return analysis_from_json(j);
}

std::string census_jsonl(const CensusVerdict& verdict) {
  std::string out;
  for (const auto& row : verdict.rows) {
    ordered_json j;
    j["label"] = row.label;
    if (!row.skipped.empty()) {
      j["skipped"] = row.skipped;
    } else {
      j["order"] = row.order;
      j["n_subgroups"] = row.n_subgroups;
      j["degree_sequence"] = row.degree_sequence;
      j["observed"] = row.observed;
      j["predicted"] = row.predicted;
      ordered_json claims = ordered_json::object();
      for (const auto& c : row.claims) claims[c.name] = to_string(c.status);
      j["claims"] = std::move(claims);
      ordered_json witnesses = ordered_json::object();
      for (const auto& c : row.claims)
        if (!c.witness.empty()) witnesses[c.name] = c.witness;
      if (!witnesses.empty()) j["claim_witnesses"] = std::move(witnesses);
    }
    out += j.dump();
    out += "\n";
  }
  return out;
}

namespace {

std::string claims_cell(const CensusRow& row) {
  std::string failing;
  bool any_applicable = false;
  for (const auto& c : row.claims) {
    if (c.status == ClaimStatus::FailsWithWitness) failing += (failing.empty() ? "" : ",") + c.name;
    if (c.status != ClaimStatus::NotApplicable) any_applicable = true;
  }
  if (!failing.empty()) return "FAIL:" + failing;
  return any_applicable ? "holds" : "-";
}

}  // namespace

std::string census_summary(const CensusVerdict& verdict) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "label" << std::right << std::setw(6) << "order"
      << std::setw(7) << "subs" << std::setw(9) << "regular" << std::setw(11) << "predicted"
      << "  claims\n";
  for (const auto& row : verdict.rows) {
    if (!row.skipped.empty()) {
      out << std::left << std::setw(20) << row.label << "  SKIPPED (" << row.skipped << ")\n";
      continue;
    }
    out << std::left << std::setw(20) << row.label << std::right << std::setw(6) << row.order
        << std::setw(7) << row.n_subgroups << std::setw(9) << (row.observed ? "yes" : "no")
        << std::setw(11) << (row.predicted ? "yes" : "no") << "  " << claims_cell(row)
        << (row.match ? "" : "  MISMATCH") << "\n";
  }
  out << "\ncensus: " << verdict.corpus_description << "\n";
  out << "groups: " << verdict.rows.size() << "  mismatches: " << verdict.mismatched_labels.size()
      << "  claim failures: " << verdict.claim_failures << "  skipped: " << verdict.skipped_count
      << "\n";
  if (verdict.verified() && verdict.claim_failures == 0)
    out << "result: regular if and only if cyclic of square-free order, on every group checked\n";
  else
    out << "result: VIOLATIONS FOUND\n";
  return out.str();
}

}  // namespace subgraph
