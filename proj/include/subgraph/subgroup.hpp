#pragma once

#include <span>
#include <utility>
#include <vector>

#include "subgraph/bitset.hpp"
#include "subgraph/group.hpp"

namespace subgraph {

// A subgroup of a fixed parent group: membership bitmask plus cached order.
struct Subgroup {
  Bitset members;
  int order = 0;

  bool operator==(const Subgroup&) const = default;
  bool contains(int i) const { return members.test(i); }
  std::vector<int> element_list() const { return members.to_vector(); }
};

Subgroup subgroup_from_mask(Bitset mask);
Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

// Canonical ordering: by order, then mask-as-integer. Every subgroup list in
// this library is sorted with this.
bool canonical_less(const Subgroup& a, const Subgroup& b);

// Nonempty and closed under products (inverses then follow from finiteness).
bool subgroup_is_closed(const Group& g, const Subgroup& h);

// Least subgroup containing the seed elements, by worklist closure under
// products. An empty seed yields the trivial subgroup.
Subgroup generated_subgroup(const Group& g, std::span<const int> seed);

Subgroup cyclic_subgroup(const Group& g, int a);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);

// Every subgroup of g: all cyclic subgroups, closed under join to the fixed
// point. Sorted canonically. Throws CapError past limits.max_subgroups.
std::vector<Subgroup> all_subgroups(const Group& g, const Limits& limits = {});

// The prime-order subgroups (atoms of the lattice), grouped by prime.
struct MinimalSubgroupTable {
  std::vector<std::pair<int, std::vector<Subgroup>>> by_prime;  // primes ascending
  int alpha = 0;

  int alpha_p(int p) const;
  std::vector<Subgroup> flattened() const;
};

MinimalSubgroupTable minimal_subgroups(const Group& g, const std::vector<Subgroup>& subs);

Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup centralizer(const Group& g, const Subgroup& h);

// First Sylow p-subgroup in canonical order; the checks built on it are
// conjugation-invariant, so which one is returned is immaterial.
Subgroup sylow_subgroup(const Group& g, int p, const std::vector<Subgroup>& subs);

// Indices into subs of the subgroups covered by h (h's maximal subgroups).
// subs must be the complete subgroup list of the ambient group.
std::vector<int> maximal_subgroups_of(const std::vector<Subgroup>& subs, const Subgroup& h);

// Intersection of the maximal subgroups of h; h itself when h is trivial.
Subgroup frattini_subgroup(const Group& g, const Subgroup& h, const std::vector<Subgroup>& subs);

bool is_elementary_abelian(const Group& g);
bool is_elementary_abelian(const Group& g, const Subgroup& h);

}  // namespace subgraph
