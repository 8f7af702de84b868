#pragma once

#include <string>
#include <vector>

namespace subgraph {

// Resource caps shared by group construction and subgroup enumeration.
struct Limits {
  int max_order = 200;
  int max_subgroups = 20000;
};

// A finite group as a full Cayley table over element indices 0..order-1.
// O(n^2) memory buys O(1) products; the intended scale is |G| <= max_order.
// Groups are immutable after construction and safe to share across threads.
struct Group {
  int order = 0;
  std::vector<int> mul;  // row-major: mul[a*order + b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::string label;

  int at(int a, int b) const { return mul[std::size_t(a) * order + b]; }
  int conj(int x, int a) const { return at(at(x, a), inv[x]); }  // x a x^-1
};

Group make_cyclic(int n, const Limits& limits = {});

// Convention: D_n has order 2n (n rotations at indices 0..n-1, then n
// reflections). s r s = r^-1.
Group make_dihedral(int n, const Limits& limits = {});

Group make_quaternion(const Limits& limits = {});  // Q8
Group make_symmetric(int n, const Limits& limits = {});
Group make_alternating(int n, const Limits& limits = {});

// Componentwise product on index pairs, flattened row-major; label "AxB".
Group direct_product(const Group& g, const Group& h, const Limits& limits = {});

// Breadth-first closure of permutation generators acting on {0..degree-1}.
// Element 0 is the identity; the rest follow discovery order, so indices are
// reproducible for a fixed generator list.
Group from_permutation_generators(int degree, const std::vector<std::vector<int>>& generators,
                                  const Limits& limits = {}, std::string label = "perm");

// Validates the full set of group axioms (Latin square, identity, inverses,
// associativity over all n^3 triples) before accepting the table.
Group from_cayley_table(const std::vector<std::vector<int>>& table, const Limits& limits = {},
                        std::string label = "table");

int element_order(const Group& g, int a);
bool is_cyclic(const Group& g);
bool is_abelian(const Group& g);

}  // namespace subgraph
