#include <iostream>

#include "CLI11.hpp"
#include "subgraph/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "subgraph: subgroup graphs of small finite groups.\n"
      "Builds the Hasse diagram of the subgroup lattice, checks graph\n"
      "regularity against the cyclic/square-free characterization, and\n"
      "verifies the supporting counting identities over a census of\n"
      "constructible groups.\n\n"
      "Group specs: C<n>, D<n> (order 2n), S<n>, A<n>, Q8, @<file>, combined\n"
      "with 'x' for direct products (e.g. C2xC6). SUBGRAPH_MAX_ORDER\n"
      "overrides the default order cap of 200."};
  app.require_subcommand(1);

  const subgraph::Limits env_limits = subgraph::limits_from_env();

  subgraph::AnalyzeOptions analyze;
  analyze.limits = env_limits;
  auto* cmd_an = app.add_subcommand("analyze", "Analyze one group's subgroup graph");
  cmd_an->add_option("spec", analyze.spec, "group spec, e.g. C30 or C2xD4")->required();
  cmd_an->add_option("--dot", analyze.dot_path, "write the lattice as Graphviz DOT");
  cmd_an->add_option("--json", analyze.json_path, "write the analysis document as JSON");
  cmd_an->add_option("--max-order", analyze.limits.max_order, "group order cap");
  cmd_an->add_option("--max-subgroups", analyze.limits.max_subgroups, "subgroup count cap");

  subgraph::CensusOptions census;
  census.limits = env_limits;
  auto* cmd_ce = app.add_subcommand("census", "Verify the regularity equivalence over the corpus");
  cmd_ce->add_option("--max-order", census.max_order, "largest group order in the corpus");
  cmd_ce->add_option("--corpus", census.corpus_path, "file of extra group specs, one per line");
  cmd_ce->add_option("--jobs", census.jobs, "worker threads (default: all cores)");
  cmd_ce->add_option("--jsonl", census.jsonl_path, "write one JSON object per group");

  subgraph::ClaimsOptions claims;
  claims.limits = env_limits;
  auto* cmd_cl = app.add_subcommand("claims", "Run the claim suite on one group");
  cmd_cl->add_option("spec", claims.spec, "group spec")->required();
  cmd_cl->add_option("--max-order", claims.limits.max_order, "group order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return subgraph::kExitError;
  }

  if (cmd_an->parsed()) return subgraph::cmd_analyze(analyze, std::cout, std::cerr);
  if (cmd_ce->parsed()) return subgraph::cmd_census(census, std::cout, std::cerr);
  return subgraph::cmd_claims(claims, std::cout, std::cerr);
}
