#include "subgraph/subgroup.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "subgraph/arith.hpp"
#include "subgraph/error.hpp"

namespace subgraph {

namespace {

// Extends (mask, members) to product closure. Members before `start` are
// assumed already pairwise closed; every pair with at least one element at
// index >= start is multiplied both ways when its later element is reached.
void close_under_products(const Group& g, Bitset& mask, std::vector<int>& members,
                          std::size_t start) {
  for (std::size_t i = start; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int x = members[i];
      const int y = members[j];
      const int xy = g.at(x, y);
      if (!mask.test(xy)) {
        mask.set(xy);
        members.push_back(xy);
      }
      const int yx = g.at(y, x);
      if (!mask.test(yx)) {
        mask.set(yx);
        members.push_back(yx);
      }
    }
  }
}

}  // namespace

Subgroup subgroup_from_mask(Bitset mask) {
  int n = mask.count();
  return Subgroup{std::move(mask), n};
}

Subgroup trivial_subgroup(const Group& g) {
  Bitset mask(g.order);
  mask.set(g.identity);
  return Subgroup{std::move(mask), 1};
}

Subgroup whole_group(const Group& g) {
  Bitset mask(g.order);
  for (int i = 0; i < g.order; ++i) mask.set(i);
  return Subgroup{std::move(mask), g.order};
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members.compare(b.members) < 0;
}

bool subgroup_is_closed(const Group& g, const Subgroup& h) {
  if (h.order == 0) return false;
  const auto elems = h.element_list();
  for (int a : elems)
    for (int b : elems)
      if (!h.members.test(g.at(a, b))) return false;
  return true;
}

Subgroup generated_subgroup(const Group& g, std::span<const int> seed) {
  Bitset mask(g.order);
  std::vector<int> members;
  mask.set(g.identity);
  members.push_back(g.identity);
  for (int s : seed) {
    if (s < 0 || s >= g.order)
      throw InvalidArgumentError("seed element " + std::to_string(s) + " out of range");
    if (!mask.test(s)) {
      mask.set(s);
      members.push_back(s);
    }
  }
  close_under_products(g, mask, members, 0);
  return Subgroup{std::move(mask), int(members.size())};
}

Subgroup cyclic_subgroup(const Group& g, int a) {
  if (a < 0 || a >= g.order)
    throw InvalidArgumentError("element index " + std::to_string(a) + " out of range");
  Bitset mask(g.order);
  mask.set(g.identity);
  int count = 1, x = a;
  while (x != g.identity) {
    mask.set(x);
    ++count;
    x = g.at(x, a);
  }
  return Subgroup{std::move(mask), count};
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (b.members.is_subset_of(a.members)) return a;
  if (a.members.is_subset_of(b.members)) return b;
  const Subgroup& base = a.order >= b.order ? a : b;
  const Subgroup& extra = a.order >= b.order ? b : a;
  Bitset mask = base.members;
  std::vector<int> members = base.element_list();
  const std::size_t start = members.size();
  extra.members.for_each([&](int x) {
    if (!mask.test(x)) {
      mask.set(x);
      members.push_back(x);
    }
  });
  close_under_products(g, mask, members, start);
  return Subgroup{std::move(mask), int(members.size())};
}

std::vector<Subgroup> all_subgroups(const Group& g, const Limits& limits) {
  std::vector<Subgroup> pool;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto push = [&](Subgroup s) {
    if (seen.insert(s.members).second) {
      pool.push_back(std::move(s));
      if (int(pool.size()) > limits.max_subgroups)
        throw CapError("subgroup enumeration for " + g.label + " exceeds the cap of " +
                       std::to_string(limits.max_subgroups));
    }
  };

  push(trivial_subgroup(g));
  for (int a = 0; a < g.order; ++a) push(cyclic_subgroup(g, a));
  const std::vector<Subgroup> cyclics = pool;

  // Joining against the cyclic generators reaches the same fixed point as
  // pairwise joins: every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const auto& c : cyclics) {
      if (c.members.is_subset_of(pool[i].members)) continue;
      push(join(g, pool[i], c));
    }
  }

  std::sort(pool.begin(), pool.end(), canonical_less);
  return pool;
}

int MinimalSubgroupTable::alpha_p(int p) const {
  for (const auto& [q, list] : by_prime)
    if (q == p) return int(list.size());
  return 0;
}

std::vector<Subgroup> MinimalSubgroupTable::flattened() const {
  std::vector<Subgroup> out;
  for (const auto& [p, list] : by_prime) out.insert(out.end(), list.begin(), list.end());
  return out;
}

MinimalSubgroupTable minimal_subgroups(const Group&, const std::vector<Subgroup>& subs) {
  MinimalSubgroupTable table;
  for (const auto& s : subs) {
    if (!is_prime(s.order)) continue;
    auto it = std::find_if(table.by_prime.begin(), table.by_prime.end(),
                           [&](const auto& e) { return e.first == s.order; });
    if (it == table.by_prime.end()) {
      table.by_prime.emplace_back(s.order, std::vector<Subgroup>{});
      it = table.by_prime.end() - 1;
    }
    it->second.push_back(s);
    ++table.alpha;
  }
  std::sort(table.by_prime.begin(), table.by_prime.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return table;
}

namespace {

void require_subgroup(const Group& g, const Subgroup& h, const char* what) {
  if (h.members.bit_capacity() != g.order || !subgroup_is_closed(g, h))
    throw InvalidArgumentError(std::string(what) + ": argument is not a subgroup of " + g.label);
}

}  // namespace

Subgroup normalizer(const Group& g, const Subgroup& h) {
  require_subgroup(g, h, "normalizer");
  const auto elems = h.element_list();
  Bitset mask(g.order);
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int a : elems) {
      if (!h.members.test(g.conj(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) mask.set(x);
  }
  return subgroup_from_mask(std::move(mask));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  require_subgroup(g, h, "centralizer");
  const auto elems = h.element_list();
  Bitset mask(g.order);
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int a : elems) {
      if (g.at(x, a) != g.at(a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) mask.set(x);
  }
  return subgroup_from_mask(std::move(mask));
}

Subgroup sylow_subgroup(const Group& g, int p, const std::vector<Subgroup>& subs) {
  if (!is_prime(p)) throw InvalidArgumentError("sylow_subgroup: p = " + std::to_string(p) + " is not prime");
  if (g.order % p != 0)
    throw InvalidArgumentError("no Sylow subgroup: " + std::to_string(p) + " does not divide |" +
                               g.label + "| = " + std::to_string(g.order));
  int pe = 1;
  for (int n = g.order; n % p == 0; n /= p) pe *= p;
  for (const auto& s : subs)
    if (s.order == pe) return s;
  throw InvalidArgumentError("subgroup list for " + g.label + " is missing a Sylow " +
                             std::to_string(p) + "-subgroup; list incomplete?");
}

std::vector<int> maximal_subgroups_of(const std::vector<Subgroup>& subs, const Subgroup& h) {
  std::vector<int> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& k = subs[i];
    if (k.order >= h.order || h.order % k.order != 0) continue;
    if (!k.members.is_subset_of(h.members)) continue;
    bool covered = false;
    for (const auto& l : subs) {
      if (l.order <= k.order || l.order >= h.order) continue;
      if (l.order % k.order != 0 || h.order % l.order != 0) continue;
      if (k.members.is_subset_of(l.members) && l.members.is_subset_of(h.members)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(int(i));
  }
  return out;
}

Subgroup frattini_subgroup(const Group& g, const Subgroup& h, const std::vector<Subgroup>& subs) {
  require_subgroup(g, h, "frattini_subgroup");
  if (h.order == 1) return h;
  Bitset mask = h.members;
  for (int i : maximal_subgroups_of(subs, h)) mask = mask & subs[i].members;
  return subgroup_from_mask(std::move(mask));
}

bool is_elementary_abelian(const Group& g) {
  return is_elementary_abelian(g, whole_group(g));
}

bool is_elementary_abelian(const Group& g, const Subgroup& h) {
  const auto elems = h.element_list();
  for (int a : elems)
    for (int b : elems)
      if (g.at(a, b) != g.at(b, a)) return false;
  int p = 0;
  for (int a : elems) {
    if (a == g.identity) continue;
    const int k = element_order(g, a);
    if (p == 0) {
      if (!is_prime(k)) return false;
      p = k;
    } else if (k != p) {
      return false;
    }
  }
  return true;
}

}  // namespace subgraph
