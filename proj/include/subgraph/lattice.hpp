#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subgraph/subgroup.hpp"

namespace subgraph {

// The subgroup graph as a Hasse diagram. Cover edges are stored directed
// from subgroup to overgroup; the graph itself is undirected, so the degree
// of a vertex splits as delta = deg1 + deg2 with deg1[v] = #incoming edges
// (maximal subgroups of v) and deg2[v] = #outgoing edges (subgroups v is
// maximal in).
struct Lattice {
  std::string group_label;
  int group_order = 0;
  std::vector<Subgroup> vertices;           // canonically sorted
  std::vector<std::pair<int, int>> covers;  // (i, j): vertex i maximal in vertex j
  std::vector<int> deg1, deg2;
};

struct DegreeTriple {
  int delta1 = 0;
  int delta2 = 0;
  int delta = 0;
};

// subs must be the complete subgroup list. A lightweight integrity check
// rejects truncated input: trivial and whole-group vertices present, every
// vertex closed, every cyclic subgroup present, every vertex-with-atom join
// present (exact for any single missing subgroup).
Lattice build_lattice(const Group& g, std::vector<Subgroup> subs);

DegreeTriple degree(const Lattice& lat, int v);

struct RegularityReport {
  std::string group_label;
  int vertex_count = 0;
  std::vector<int> degree_sequence;                 // sorted ascending
  std::vector<std::pair<int, int>> alpha_by_prime;  // (p, alpha_p)
  int alpha = 0;
  bool is_regular = false;
  std::optional<std::pair<int, int>> witness;  // lexicographically first unequal-degree pair
};

RegularityReport regularity(const Lattice& lat);

// Deterministic Graphviz digraph, ranked by subgroup order; byte-identical
// across runs for the same group.
std::string export_dot(const Lattice& lat);

}  // namespace subgraph
