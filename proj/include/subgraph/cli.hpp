#pragma once

#include <iosfwd>
#include <string>

#include "subgraph/group.hpp"

namespace subgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

// Default caps, with SUBGRAPH_MAX_ORDER honored when set.
Limits limits_from_env();

struct AnalyzeOptions {
  std::string spec;
  std::string dot_path;   // empty = do not write
  std::string json_path;  // empty = do not write
  Limits limits;
};

struct CensusOptions {
  int max_order = 100;
  std::string corpus_path;  // optional extra specs, one per line
  std::string jsonl_path;   // empty = do not write
  int jobs = 0;             // 0 = available parallelism
  Limits limits;
};

struct ClaimsOptions {
  std::string spec;
  Limits limits;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream& err);
int cmd_claims(const ClaimsOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace subgraph
