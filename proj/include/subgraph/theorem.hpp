#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subgraph/group_spec.hpp"
#include "subgraph/lattice.hpp"

namespace subgraph {

// The characterization under test: the subgroup graph is regular exactly
// when the group is cyclic of square-free order.
bool predicted_regular(const Group& g);

struct EquivalenceResult {
  bool observed = false;
  bool predicted = false;
  bool match = false;
};

EquivalenceResult verify_equivalence(const Group& g, const Limits& limits = {});

enum class ClaimStatus { Holds, FailsWithWitness, NotApplicable };
const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string name;  // "claim1".."claim6"
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string witness;  // nonempty only when status is FailsWithWitness

  bool operator==(const ClaimResult&) const = default;
};

struct ClaimReport {
  std::string group_label;
  std::vector<ClaimResult> entries;

  bool any_failure() const;
};

// Claim bodies, checked unconditionally. Exposed separately so the failure
// and witness paths stay testable on groups outside the regularity
// hypothesis (on which the conditional checks report not-applicable).
std::optional<std::string> claim1_violation(const Group& g, const MinimalSubgroupTable& minimals);
Subgroup generated_by_odd_minimals(const Group& g, const MinimalSubgroupTable& minimals);
std::optional<std::string> abelian_violation(const Group& g, const Subgroup& h);
std::optional<std::string> normality_violation(const Group& g, const Subgroup& h);

// Claim 1: elements of odd prime-power order normalize every minimal subgroup.
ClaimResult verify_claim1(const Group& g, const std::vector<Subgroup>& subs, const Lattice& lat);

// Claims 2 and 3: N = <odd-order minimal subgroups> is abelian normal, and
// G/N is a 2-group.
std::pair<ClaimResult, ClaimResult> verify_claim2_3(const Group& g,
                                                    const std::vector<Subgroup>& subs,
                                                    const Lattice& lat);

// Claims 4 and 5: the Sylow 2-subgroup is elementary abelian with trivial
// Frattini subgroup; the whole group is abelian with all Sylow subgroups
// elementary abelian.
std::pair<ClaimResult, ClaimResult> verify_claim4_5(const Group& g,
                                                    const std::vector<Subgroup>& subs,
                                                    const Lattice& lat);

// Claim 6 counting identity applied in-census: for abelian groups whose
// Sylow p-subgroup is elementary abelian of order p^d with d >= 2,
// alpha_p = (p^d-1)/(p-1).
ClaimResult verify_claim6(const Group& g, const std::vector<Subgroup>& subs);

ClaimReport run_claims(const Group& g, const std::vector<Subgroup>& subs, const Lattice& lat);

// Elementary abelian group of order p^d: the number of maximal subgroups
// equals the number of minimal subgroups equals (p^d-1)/(p-1).
bool verify_counting_identity(int p, int d, const Limits& limits = {});

struct CensusRow {
  std::string label;
  int order = 0;
  int n_subgroups = 0;
  std::vector<int> degree_sequence;
  bool observed = false;
  bool predicted = false;
  bool match = false;
  std::vector<ClaimResult> claims;
  std::string skipped;  // nonempty: the row records a skip, other fields unset
};

struct CensusVerdict {
  std::string corpus_description;
  std::vector<CensusRow> rows;
  std::vector<std::string> mismatched_labels;
  int claim_failures = 0;
  int skipped_count = 0;

  bool verified() const { return mismatched_labels.empty(); }
};

// The constructible families checked by default: all C_n up to max_order,
// all abelian groups of order <= 48, dihedrals to order 60, S3/S4/A4/A5/Q8,
// and C_m x D_n products to order 60 (caps shrink with max_order). The
// corpus covers families, not all isomorphism types of each order.
std::vector<GroupSpec> default_corpus(int max_order);

// Embarrassingly parallel map over the corpus with a deterministic ordered
// reduce; row order never depends on the job count. jobs <= 0 means use the
// available hardware parallelism. Per-group failures become skip rows.
CensusVerdict run_census(const std::vector<GroupSpec>& corpus, const Limits& limits = {},
                         int jobs = 0, std::string description = "");

}  // namespace subgraph
