// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expects the CLI binary path as argv[1] (used by the
// determinism criterion).
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "subgraph/arith.hpp"
#include "subgraph/error.hpp"
#include "subgraph/report.hpp"
#include "subgraph/theorem.hpp"

using namespace subgraph;
namespace fs = std::filesystem;

namespace {

struct Bundle {
  Group group;
  std::vector<Subgroup> subs;
  Lattice lattice;
  RegularityReport report;
  ClaimReport claims;
  bool predicted = false;
};

std::vector<Bundle> build_census_bundles(int max_order) {
  const auto corpus = default_corpus(max_order);
  const Limits limits{.max_order = max_order};
  std::vector<Bundle> bundles(corpus.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1)) {
      Bundle& b = bundles[i];
      b.group = build_group(corpus[i], limits);
      b.subs = all_subgroups(b.group, limits);
      b.lattice = build_lattice(b.group, b.subs);
      b.report = regularity(b.lattice);
      b.claims = run_claims(b.group, b.subs, b.lattice);
      b.predicted = predicted_regular(b.group);
    }
  };
  const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return bundles;
}

int g_failed = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name << " ("
            << detail << ")\n";
  if (!pass) ++g_failed;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion1_theorem_equivalence(const std::vector<Bundle>& bundles, double seconds) {
  int mismatches = 0;
  for (const auto& b : bundles)
    if (b.report.is_regular != b.predicted) ++mismatches;
  std::ostringstream detail;
  detail << bundles.size() << " groups, " << mismatches << " mismatches, " << seconds << "s";
  report(1, "observed regularity equals cyclic-and-square-free over the default census",
         mismatches == 0, detail.str());
}

void criterion2_degree_t() {
  const Limits limits{.max_order = 210};
  const int ns[] = {2, 6, 30, 210};
  bool pass = true;
  for (int t = 1; t <= 4; ++t) {
    const Group g = make_cyclic(ns[t - 1], limits);
    const Lattice lat = build_lattice(g, all_subgroups(g, limits));
    if (int(lat.vertices.size()) != (1 << t)) pass = false;
    for (std::size_t v = 0; v < lat.vertices.size(); ++v)
      if (lat.deg1[v] + lat.deg2[v] != t) pass = false;
  }
  report(2, "every vertex of C2, C6, C30, C210 has degree t with 2^t vertices", pass,
         "t = 1..4");
}

void criterion3_alpha_identity(const std::vector<Bundle>& bundles) {
  bool pass = true;
  std::string offender;
  for (const auto& b : bundles) {
    const int delta_trivial = b.lattice.deg1[0] + b.lattice.deg2[0];
    int alpha_sum = 0;
    for (auto [p, a] : b.report.alpha_by_prime) {
      alpha_sum += a;
      if (a != oracles::alpha_p_by_element_count(b.group, p)) pass = false;
    }
    if (delta_trivial != b.report.alpha || b.report.alpha != alpha_sum) pass = false;
    // bottom vertex has no maximal subgroups, top vertex sits in nothing
    if (b.lattice.deg1.front() != 0 || b.lattice.deg2.back() != 0) pass = false;
    if (!pass && offender.empty()) offender = b.group.label;
  }
  report(3, "delta({1}) = alpha = sum of alpha_p, with the element-count oracle", pass,
         pass ? "all census groups" : "first offender " + offender);
}

void criterion4_counting_identity() {
  const std::tuple<int, int, int> cases[] = {{2, 2, 3},  {2, 3, 7},  {2, 4, 15},
                                             {3, 2, 4},  {3, 3, 13}, {5, 2, 6}};
  bool pass = true;
  std::ostringstream detail;
  for (auto [p, d, expected] : cases) {
    Group g = make_cyclic(p);
    for (int k = 1; k < d; ++k) g = direct_product(g, make_cyclic(p));
    const auto subs = all_subgroups(g);
    const int maximal = int(maximal_subgroups_of(subs, whole_group(g)).size());
    const int minimal = minimal_subgroups(g, subs).alpha;
    if (maximal != expected || minimal != expected || !verify_counting_identity(p, d))
      pass = false;
    detail << "(" << p << "," << d << ")=" << maximal << " ";
  }
  report(4, "elementary abelian maximal-subgroup counts equal (p^d-1)/(p-1)", pass, detail.str());
}

void criterion5_oracle_equivalence(const std::vector<Bundle>& bundles) {
  int subset_checked = 0, cover_checked = 0;
  bool pass = true;
  for (const auto& b : bundles) {
    if (b.group.order <= 16) {
      const auto expected = oracles::brute_force_subgroup_masks(b.group);
      if (expected.size() != b.subs.size()) pass = false;
      std::set<std::uint64_t> got;
      for (const auto& s : b.subs) got.insert(oracles::small_mask(s));
      if (got != std::set<std::uint64_t>(expected.begin(), expected.end())) pass = false;
      ++subset_checked;
    }
    if (b.group.order <= 24) {
      if (b.lattice.covers != oracles::brute_force_cover_edges(b.lattice.vertices)) pass = false;
      ++cover_checked;
    }
  }
  report(5, "enumeration and cover relation agree with exhaustive oracles", pass,
         std::to_string(subset_checked) + " subset scans, " + std::to_string(cover_checked) +
             " betweenness scans");
}

void criterion6_structural_invariants(const std::vector<Bundle>& bundles) {
  bool pass = true;
  long long pairs = 0;
  for (const auto& b : bundles) {
    int degree_sum = 0;
    for (std::size_t v = 0; v < b.lattice.vertices.size(); ++v)
      degree_sum += b.lattice.deg1[v] + b.lattice.deg2[v];
    if (degree_sum != 2 * int(b.lattice.covers.size())) pass = false;

    for (const auto& s : b.subs) {
      if (b.group.order % s.order != 0) pass = false;
      if (!centralizer(b.group, s).members.is_subset_of(normalizer(b.group, s).members))
        pass = false;
      ++pairs;
    }
  }
  report(6, "handshake lemma, Lagrange divisibility, centralizer within normalizer", pass,
         std::to_string(pairs) + " subgroups checked");
}

void criterion7_claim_suite(const std::vector<Bundle>& bundles) {
  bool pass = true;
  int regular_groups = 0;
  for (const auto& b : bundles) {
    for (const auto& c : b.claims.entries)
      if (c.status == ClaimStatus::FailsWithWitness) pass = false;  // build-breaking anywhere
    if (!b.report.is_regular) continue;
    ++regular_groups;
    for (const auto& c : b.claims.entries) {
      if (c.name == "claim6") continue;  // counting identity never applies to regular groups
      if (c.status != ClaimStatus::Holds) pass = false;
    }
  }

  auto witness_of = [](const Group& g) {
    return regularity(build_lattice(g, all_subgroups(g))).witness;
  };
  for (int round = 0; round < 2; ++round) {
    for (const Group& g :
         {make_symmetric(3), make_cyclic(4), make_cyclic(9), make_dihedral(4)}) {
      const auto w = witness_of(g);
      if (!w.has_value() || *w != std::pair<int, int>{0, 1}) pass = false;
    }
  }
  report(7, "claims 1-5 hold on regular groups; witnesses stable on S3, C4, C9, D4", pass,
         std::to_string(regular_groups) + " regular groups");
}

void criterion8_determinism(const std::string& cli) {
  if (cli.empty()) {
    report(8, "census JSONL is byte-identical across runs and job counts", false,
           "CLI binary path not provided");
    return;
  }
  const fs::path tmp = fs::temp_directory_path();
  const fs::path files[] = {tmp / "acc_census_1a.jsonl", tmp / "acc_census_1b.jsonl",
                            tmp / "acc_census_8.jsonl"};
  const std::string runs[] = {"--jobs 1 --jsonl " + files[0].string(),
                              "--jobs 1 --jsonl " + files[1].string(),
                              "--jobs 8 --jsonl " + files[2].string()};
  bool pass = true;
  for (int i = 0; i < 3; ++i) {
    const std::string cmd = "\"" + cli + "\" census --max-order 60 " + runs[i] + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) pass = false;
  }
  const std::string a = slurp(files[0]), b = slurp(files[1]), c = slurp(files[2]);
  pass = pass && !a.empty() && a == b && a == c;
  for (const auto& f : files) fs::remove(f);
  report(8, "census JSONL is byte-identical across runs and job counts", pass,
         "max-order 60, jobs 1 vs 1 vs 8");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Bundle> bundles = build_census_bundles(100);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  criterion1_theorem_equivalence(bundles, seconds);
  criterion2_degree_t();
  criterion3_alpha_identity(bundles);
  criterion4_counting_identity();
  criterion5_oracle_equivalence(bundles);
  criterion6_structural_invariants(bundles);
  criterion7_claim_suite(bundles);
  criterion8_determinism(cli);

  if (g_failed == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failed << " criterion(s) failed\n";
  return 1;
}
