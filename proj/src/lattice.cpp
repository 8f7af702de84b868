#include "subgraph/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "subgraph/arith.hpp"
#include "subgraph/error.hpp"

namespace subgraph {

namespace {

void check_integrity(const Group& g, const std::vector<Subgroup>& subs) {
  auto fail = [&](const std::string& why) {
    throw InvalidArgumentError("subgroup list for " + g.label + " fails integrity: " + why);
  };
  if (subs.empty() || subs.front().order != 1) fail("trivial subgroup missing");
  if (subs.back().order != g.order) fail("whole group missing");

  std::unordered_set<Bitset, BitsetHash> present;
  for (const auto& s : subs) {
    if (!subgroup_is_closed(g, s)) fail("a vertex is not closed under products");
    present.insert(s.members);
  }
  for (int a = 0; a < g.order; ++a)
    if (!present.count(cyclic_subgroup(g, a).members))
      fail("cyclic subgroup of element " + std::to_string(a) + " missing");

  for (const auto& s : subs) {
    if (!is_prime(s.order)) continue;
    for (const auto& v : subs) {
      if (s.members.is_subset_of(v.members)) continue;
      if (!present.count(join(g, v, s).members)) fail("join of two vertices missing");
    }
  }
}

}  // namespace

Lattice build_lattice(const Group& g, std::vector<Subgroup> subs) {
  std::sort(subs.begin(), subs.end(), canonical_less);
  check_integrity(g, subs);

  const int n = int(subs.size());
  Lattice lat;
  lat.group_label = g.label;
  lat.group_order = g.order;
  lat.vertices = std::move(subs);
  lat.deg1.assign(n, 0);
  lat.deg2.assign(n, 0);

  // Cover pairs: i strictly below j with nothing between. Betweenness
  // candidates are pruned by Lagrange: |i| divides |k| divides |j|.
  for (int j = 0; j < n; ++j) {
    const auto& vj = lat.vertices[j];
    for (int i = 0; i < j; ++i) {
      const auto& vi = lat.vertices[i];
      if (vi.order >= vj.order || vj.order % vi.order != 0) continue;
      if (!vi.members.is_subset_of(vj.members)) continue;
      bool covered = false;
      for (int k = 0; k < n && !covered; ++k) {
        const auto& vk = lat.vertices[k];
        if (vk.order <= vi.order || vk.order >= vj.order) continue;
        if (vk.order % vi.order != 0 || vj.order % vk.order != 0) continue;
        covered = vi.members.is_subset_of(vk.members) && vk.members.is_subset_of(vj.members);
      }
      if (!covered) lat.covers.emplace_back(i, j);
    }
  }
  std::sort(lat.covers.begin(), lat.covers.end());
  for (auto [i, j] : lat.covers) {
    ++lat.deg2[i];
    ++lat.deg1[j];
  }
  return lat;
}

DegreeTriple degree(const Lattice& lat, int v) {
  if (v < 0 || v >= int(lat.vertices.size()))
    throw InvalidArgumentError("vertex index " + std::to_string(v) + " out of range");
  return DegreeTriple{lat.deg1[v], lat.deg2[v], lat.deg1[v] + lat.deg2[v]};
}

RegularityReport regularity(const Lattice& lat) {
  RegularityReport rep;
  rep.group_label = lat.group_label;
  rep.vertex_count = int(lat.vertices.size());

  std::vector<int> deltas(lat.vertices.size());
  for (std::size_t v = 0; v < lat.vertices.size(); ++v) deltas[v] = lat.deg1[v] + lat.deg2[v];
  for (std::size_t v = 1; v < deltas.size(); ++v) {
    if (deltas[v] != deltas[0]) {
      rep.witness = {0, int(v)};
      break;
    }
  }
  rep.is_regular = !rep.witness.has_value();
  rep.degree_sequence = deltas;
  std::sort(rep.degree_sequence.begin(), rep.degree_sequence.end());

  for (const auto& s : lat.vertices) {
    if (!is_prime(s.order)) continue;
    if (!rep.alpha_by_prime.empty() && rep.alpha_by_prime.back().first == s.order)
      ++rep.alpha_by_prime.back().second;
    else
      rep.alpha_by_prime.emplace_back(s.order, 1);  // vertices sorted by order
    ++rep.alpha;
  }
  return rep;
}

std::string export_dot(const Lattice& lat) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };

  std::string out = "digraph " + quoted(lat.group_label) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.vertices.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"order=" + std::to_string(lat.vertices[i].order) +
           " idx=" + std::to_string(i) + "\"];\n";
  }
  for (std::size_t i = 0; i < lat.vertices.size();) {
    std::size_t j = i;
    while (j < lat.vertices.size() && lat.vertices[j].order == lat.vertices[i].order) ++j;
    out += "  { rank=same;";
    for (std::size_t k = i; k < j; ++k) out += " v" + std::to_string(k) + ";";
    out += " }\n";
    i = j;
  }
  for (auto [i, j] : lat.covers)
    out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace subgraph
