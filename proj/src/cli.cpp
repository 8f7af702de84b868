#include "subgraph/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "subgraph/error.hpp"
#include "subgraph/report.hpp"

namespace subgraph {

namespace {

// Test hook: flips every prediction so the mismatch exit path can be
// exercised; no real group can produce a mismatch.
bool force_mismatch() {
  const char* v = std::getenv("SUBGRAPH_FORCE_MISMATCH");
  return v && *v && *v != '0';
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::vector<GroupSpec> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read corpus file: " + path);
  std::vector<GroupSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t end = line.find_last_not_of(" \t\r");
    out.push_back(parse_group_spec(line.substr(start, end - start + 1)));
  }
  return out;
}

}  // namespace

Limits limits_from_env() {
  Limits limits;
  if (const char* v = std::getenv("SUBGRAPH_MAX_ORDER")) {
    const int n = std::atoi(v);
    if (n > 0) limits.max_order = n;
  }
  return limits;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GroupSpec spec = parse_group_spec(opt.spec);
    const Group g = build_group(spec, opt.limits);
    const auto subs = all_subgroups(g, opt.limits);
    const Lattice lat = build_lattice(g, subs);
    const RegularityReport rep = regularity(lat);
    const ClaimReport claims = run_claims(g, subs, lat);
    bool predicted = predicted_regular(g);
    if (force_mismatch()) predicted = !predicted;

    out << "group: " << g.label << "\n";
    out << "order: " << g.order << "\n";
    out << "subgroups: " << subs.size() << "\n";
    out << "degree sequence:";
    for (int d : rep.degree_sequence) out << " " << d;
    out << "\n";
    out << "alpha: " << rep.alpha;
    if (!rep.alpha_by_prime.empty()) {
      out << "  by prime:";
      for (auto [p, a] : rep.alpha_by_prime) out << " " << p << ":" << a;
    }
    out << "\n";
    out << "regular: " << (rep.is_regular ? "true" : "false") << "\n";
    out << "predicted: " << (predicted ? "true" : "false") << "\n";

    if (!opt.dot_path.empty()) write_text_file(opt.dot_path, export_dot(lat));
    if (!opt.json_path.empty())
      write_analysis_json(make_analysis_document(lat, rep, claims, predicted), opt.json_path);

    if (rep.is_regular != predicted) {
      err << "THEOREM MISMATCH for " << g.label << ": observed regular=" << rep.is_regular
          << ", predicted=" << predicted << "\n";
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    Limits limits = opt.limits;
    limits.max_order = std::max(limits.max_order, opt.max_order);

    std::vector<GroupSpec> corpus = default_corpus(opt.max_order);
    std::string description = "default corpus (max order " + std::to_string(opt.max_order) + ")";
    if (!opt.corpus_path.empty()) {
      const auto extra = read_corpus_file(opt.corpus_path);
      corpus.insert(corpus.end(), extra.begin(), extra.end());
      description += " + " + std::to_string(extra.size()) + " extra specs";
    }

    CensusVerdict verdict = run_census(corpus, limits, opt.jobs, description);
    if (force_mismatch()) {
      for (auto& row : verdict.rows) {
        if (!row.skipped.empty()) continue;
        row.predicted = !row.predicted;
        row.match = !row.match;
        if (!row.match) verdict.mismatched_labels.push_back(row.label);
      }
    }

    if (!opt.jsonl_path.empty()) write_text_file(opt.jsonl_path, census_jsonl(verdict));
    out << census_summary(verdict);

    // Maximal forensics on a mismatch: dump the offending lattices. Rows sit
    // in corpus order, so row index i maps back to corpus[i].
    int dumped = 0;
    for (std::size_t i = 0; i < verdict.rows.size() && dumped < 5; ++i) {
      const auto& row = verdict.rows[i];
      if (!row.skipped.empty() || row.match) continue;
      const Group g = build_group(corpus[i], limits);
      const auto subs = all_subgroups(g, limits);
      const Lattice lat = build_lattice(g, subs);
      const std::string base = "mismatch_" + sanitize_label(row.label);
      write_text_file(base + ".dot", export_dot(lat));
      write_analysis_json(make_analysis_document(lat, regularity(lat), run_claims(g, subs, lat),
                                                 row.predicted),
                          base + ".json");
      err << "mismatch lattice dumped to " << base << ".dot / " << base << ".json\n";
      ++dumped;
    }

    if (!verdict.verified() || verdict.claim_failures > 0) return kExitMismatch;
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_claims(const ClaimsOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GroupSpec spec = parse_group_spec(opt.spec);
    const Group g = build_group(spec, opt.limits);
    const auto subs = all_subgroups(g, opt.limits);
    const Lattice lat = build_lattice(g, subs);
    const ClaimReport report = run_claims(g, subs, lat);

    out << "group: " << g.label << "\n";
    out << "regular: " << (regularity(lat).is_regular ? "true" : "false") << "\n";
    for (const auto& c : report.entries) {
      out << c.name << ": " << to_string(c.status);
      if (!c.witness.empty()) out << " (" << c.witness << ")";
      out << "\n";
    }
    return report.any_failure() ? kExitMismatch : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace subgraph
