#include "subgraph/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <thread>

#include "subgraph/arith.hpp"
#include "subgraph/error.hpp"

namespace subgraph {

namespace {

std::string describe_elements(const Subgroup& h) {
  std::string out = "{";
  bool first = true;
  h.members.for_each([&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

bool lattice_is_regular(const Lattice& lat) {
  for (std::size_t v = 1; v < lat.vertices.size(); ++v)
    if (lat.deg1[v] + lat.deg2[v] != lat.deg1[0] + lat.deg2[0]) return false;
  return true;
}

bool is_odd_prime_power(int k) {
  if (k < 3 || k % 2 == 0) return false;
  auto fac = factorize(k);
  return fac.size() == 1;
}

}  // namespace

bool predicted_regular(const Group& g) {
  return is_cyclic(g) && is_squarefree(g.order);
}

EquivalenceResult verify_equivalence(const Group& g, const Limits& limits) {
  const Lattice lat = build_lattice(g, all_subgroups(g, limits));
  EquivalenceResult r;
  r.observed = regularity(lat).is_regular;
  r.predicted = predicted_regular(g);
  r.match = r.observed == r.predicted;
  return r;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds:
      return "holds";
    case ClaimStatus::FailsWithWitness:
      return "fails-with-witness";
    case ClaimStatus::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

bool ClaimReport::any_failure() const {
  for (const auto& e : entries)
    if (e.status == ClaimStatus::FailsWithWitness) return true;
  return false;
}

std::optional<std::string> claim1_violation(const Group& g, const MinimalSubgroupTable& minimals) {
  const auto atoms = minimals.flattened();
  for (int x = 0; x < g.order; ++x) {
    if (!is_odd_prime_power(element_order(g, x))) continue;
    for (const auto& a : atoms) {
      bool normalizes = true;
      const auto elems = a.element_list();
      for (int m : elems) {
        if (!a.members.test(g.conj(x, m))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes)
        return "element " + std::to_string(x) + " (order " +
               std::to_string(element_order(g, x)) + ") does not normalize A=" +
               describe_elements(a);
    }
  }
  return std::nullopt;
}

Subgroup generated_by_odd_minimals(const Group& g, const MinimalSubgroupTable& minimals) {
  std::vector<int> seed;
  for (const auto& [p, list] : minimals.by_prime) {
    if (p == 2) continue;
    for (const auto& a : list)
      a.members.for_each([&](int i) { seed.push_back(i); });
  }
  return generated_subgroup(g, seed);
}

std::optional<std::string> abelian_violation(const Group& g, const Subgroup& h) {
  const auto elems = h.element_list();
  for (int a : elems)
    for (int b : elems)
      if (g.at(a, b) != g.at(b, a))
        return "elements " + std::to_string(a) + " and " + std::to_string(b) +
               " of " + describe_elements(h) + " do not commute";
  return std::nullopt;
}

std::optional<std::string> normality_violation(const Group& g, const Subgroup& h) {
  const auto elems = h.element_list();
  for (int x = 0; x < g.order; ++x)
    for (int a : elems)
      if (!h.members.test(g.conj(x, a)))
        return "conjugation by " + std::to_string(x) + " moves " + std::to_string(a) +
               " outside " + describe_elements(h);
  return std::nullopt;
}

ClaimResult verify_claim1(const Group& g, const std::vector<Subgroup>& subs, const Lattice& lat) {
  ClaimResult r{"claim1", ClaimStatus::NotApplicable, ""};
  if (!lattice_is_regular(lat)) return r;
  auto violation = claim1_violation(g, minimal_subgroups(g, subs));
  r.status = violation ? ClaimStatus::FailsWithWitness : ClaimStatus::Holds;
  r.witness = violation.value_or("");
  return r;
}

std::pair<ClaimResult, ClaimResult> verify_claim2_3(const Group& g,
                                                    const std::vector<Subgroup>& subs,
                                                    const Lattice& lat) {
  ClaimResult r2{"claim2", ClaimStatus::NotApplicable, ""};
  ClaimResult r3{"claim3", ClaimStatus::NotApplicable, ""};
  if (!lattice_is_regular(lat)) return {r2, r3};

  const Subgroup n = generated_by_odd_minimals(g, minimal_subgroups(g, subs));
  if (auto v = abelian_violation(g, n)) {
    r2 = {"claim2", ClaimStatus::FailsWithWitness, "N not abelian: " + *v};
  } else if (auto w = normality_violation(g, n)) {
    r2 = {"claim2", ClaimStatus::FailsWithWitness, "N not normal: " + *w};
  } else {
    r2.status = ClaimStatus::Holds;
  }

  const int index = g.order / n.order;
  if (std::has_single_bit(unsigned(index)))
    r3.status = ClaimStatus::Holds;
  else
    r3 = {"claim3", ClaimStatus::FailsWithWitness,
          "index of N is " + std::to_string(index) + ", not a power of 2"};
  return {r2, r3};
}

std::pair<ClaimResult, ClaimResult> verify_claim4_5(const Group& g,
                                                    const std::vector<Subgroup>& subs,
                                                    const Lattice& lat) {
  ClaimResult r4{"claim4", ClaimStatus::NotApplicable, ""};
  ClaimResult r5{"claim5", ClaimStatus::NotApplicable, ""};
  if (!lattice_is_regular(lat)) return {r4, r5};

  if (g.order % 2 != 0) {
    r4.status = ClaimStatus::Holds;  // vacuous: no Sylow 2-subgroup
  } else {
    const Subgroup q = sylow_subgroup(g, 2, subs);
    if (!is_elementary_abelian(g, q)) {
      r4 = {"claim4", ClaimStatus::FailsWithWitness,
            "Sylow 2-subgroup " + describe_elements(q) + " is not elementary abelian"};
    } else if (frattini_subgroup(g, q, subs).order != 1) {
      r4 = {"claim4", ClaimStatus::FailsWithWitness,
            "Frattini subgroup of the Sylow 2-subgroup is nontrivial"};
    } else {
      r4.status = ClaimStatus::Holds;
    }
  }

  if (!is_abelian(g)) {
    r5 = {"claim5", ClaimStatus::FailsWithWitness, "group is not abelian"};
  } else {
    r5.status = ClaimStatus::Holds;
    for (auto [p, e] : factorize(g.order)) {
      (void)e;
      if (!is_elementary_abelian(g, sylow_subgroup(g, p, subs))) {
        r5 = {"claim5", ClaimStatus::FailsWithWitness,
              "Sylow " + std::to_string(p) + "-subgroup is not elementary abelian"};
        break;
      }
    }
  }
  return {r4, r5};
}

ClaimResult verify_claim6(const Group& g, const std::vector<Subgroup>& subs) {
  ClaimResult r{"claim6", ClaimStatus::NotApplicable, ""};
  if (g.order == 1 || !is_abelian(g)) return r;

  const auto minimals = minimal_subgroups(g, subs);
  for (auto [p, d] : factorize(g.order)) {
    if (d < 2) continue;
    const Subgroup q = sylow_subgroup(g, p, subs);
    if (!is_elementary_abelian(g, q)) continue;
    const int expected = (ipow(p, d) - 1) / (p - 1);
    if (minimals.alpha_p(p) != expected)
      return {"claim6", ClaimStatus::FailsWithWitness,
              "alpha_" + std::to_string(p) + " = " + std::to_string(minimals.alpha_p(p)) +
                  ", expected " + std::to_string(expected)};
    r.status = ClaimStatus::Holds;
  }
  return r;
}

ClaimReport run_claims(const Group& g, const std::vector<Subgroup>& subs, const Lattice& lat) {
  ClaimReport report;
  report.group_label = g.label;
  report.entries.push_back(verify_claim1(g, subs, lat));
  auto [c2, c3] = verify_claim2_3(g, subs, lat);
  report.entries.push_back(std::move(c2));
  report.entries.push_back(std::move(c3));
  auto [c4, c5] = verify_claim4_5(g, subs, lat);
  report.entries.push_back(std::move(c4));
  report.entries.push_back(std::move(c5));
  report.entries.push_back(verify_claim6(g, subs));
  return report;
}

bool verify_counting_identity(int p, int d, const Limits& limits) {
  if (!is_prime(p) || d < 1)
    throw InvalidArgumentError("verify_counting_identity requires a prime p and d >= 1");
  Group g = make_cyclic(p, limits);
  for (int k = 1; k < d; ++k) g = direct_product(g, make_cyclic(p, limits), limits);

  const auto subs = all_subgroups(g, limits);
  const int maximal = int(maximal_subgroups_of(subs, whole_group(g)).size());
  const int minimal = minimal_subgroups(g, subs).alpha;
  const int expected = (ipow(p, d) - 1) / (p - 1);
  return maximal == expected && minimal == expected;
}

namespace {

std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

// All abelian groups of order n as direct products of cyclic prime-power
// factors, skipping the all-maximal combination (that one is C_n itself).
std::vector<std::string> abelian_expressions(int n) {
  const auto fac = factorize(n);
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : fac) {
    (void)p;
    choices.push_back(partitions_of(e));
  }

  std::vector<std::string> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    bool all_maximal = true;
    for (std::size_t i = 0; i < pick.size(); ++i) all_maximal &= pick[i] == 0;
    if (!all_maximal) {
      std::string expr;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        for (int part : choices[i][pick[i]]) {
          if (!expr.empty()) expr += "x";
          expr += "C" + std::to_string(ipow(fac[i].first, part));
        }
      }
      out.push_back(std::move(expr));
    }
    std::size_t i = pick.size();
    while (i-- > 0) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (pick.empty()) return out;
  }
}

}  // namespace

std::vector<GroupSpec> default_corpus(int max_order) {
  std::vector<GroupSpec> corpus;
  std::set<std::string> seen;
  auto add = [&](const std::string& expr) {
    if (seen.insert(expr).second) corpus.push_back(parse_group_spec(expr));
  };

  for (int n = 1; n <= max_order; ++n) add("C" + std::to_string(n));

  const int abelian_cap = std::min(48, max_order);
  for (int n = 2; n <= abelian_cap; ++n)
    for (const auto& expr : abelian_expressions(n)) add(expr);

  const int small_cap = std::min(60, max_order);
  for (int n = 1; 2 * n <= small_cap; ++n) add("D" + std::to_string(n));

  for (const auto& [expr, order] : std::initializer_list<std::pair<const char*, int>>{
           {"S3", 6}, {"S4", 24}, {"A4", 12}, {"A5", 60}, {"Q8", 8}})
    if (order <= max_order) add(expr);

  for (int m = 2; 2 * m <= small_cap; ++m)
    for (int n = 1; 2 * m * n <= small_cap; ++n)
      add("C" + std::to_string(m) + "xD" + std::to_string(n));

  return corpus;
}

namespace {

CensusRow census_one(const GroupSpec& spec, const Limits& limits) {
  CensusRow row;
  row.label = spec.expression;
  try {
    const Group g = build_group(spec, limits);
    row.label = g.label;
    const auto subs = all_subgroups(g, limits);
    const Lattice lat = build_lattice(g, subs);
    const RegularityReport rep = regularity(lat);
    row.order = g.order;
    row.n_subgroups = int(subs.size());
    row.degree_sequence = rep.degree_sequence;
    row.observed = rep.is_regular;
    row.predicted = predicted_regular(g);
    row.match = row.observed == row.predicted;
    row.claims = run_claims(g, subs, lat).entries;
  } catch (const std::exception& e) {
    row = CensusRow{};
    row.label = spec.expression;
    row.skipped = e.what();
  }
  return row;
}

}  // namespace

CensusVerdict run_census(const std::vector<GroupSpec>& corpus, const Limits& limits, int jobs,
                         std::string description) {
  CensusVerdict verdict;
  verdict.corpus_description =
      description.empty() ? std::to_string(corpus.size()) + " group specs" : std::move(description);
  verdict.rows.resize(corpus.size());

  int workers = jobs > 0 ? jobs : int(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, int(corpus.size())));

  if (workers <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) verdict.rows[i] = census_one(corpus[i], limits);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
          verdict.rows[i] = census_one(corpus[i], limits);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& row : verdict.rows) {
    if (!row.skipped.empty()) {
      ++verdict.skipped_count;
      continue;
    }
    if (!row.match) verdict.mismatched_labels.push_back(row.label);
    for (const auto& c : row.claims)
      if (c.status == ClaimStatus::FailsWithWitness) ++verdict.claim_failures;
  }
  return verdict;
}

}  // namespace subgraph
