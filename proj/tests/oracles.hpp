// Independent oracles for the test suites. Everything here recomputes
// expected values from first principles (divisor arithmetic, exhaustive
// subset scans, unpruned betweenness) without touching the enumeration or
// cover algorithms under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "subgraph/group.hpp"
#include "subgraph/subgroup.hpp"

namespace oracles {

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int divisor_count(int n) { return int(divisors(n).size()); }

// Order of k in Z_n by pure modular arithmetic.
inline int cyclic_element_order(int n, int k) { return n / std::gcd(n, k); }

// Multiset of element orders, sorted; cheap isomorphism invariant.
inline std::vector<int> order_multiset(const subgraph::Group& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order; ++a) out.push_back(subgraph::element_order(g, a));
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive scan of all 2^n element subsets for product closure. Only
// sensible for |G| <= ~20.
inline std::vector<std::uint64_t> brute_force_subgroup_masks(const subgraph::Group& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t top = std::uint64_t{1} << g.order;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    if (!(mask >> g.identity & 1)) continue;
    bool closed = true;
    for (int a = 0; a < g.order && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < g.order && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        closed = (mask >> g.at(a, b)) & 1;
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

inline std::uint64_t small_mask(const subgraph::Subgroup& s) {
  std::uint64_t m = 0;
  s.members.for_each([&](int i) { m |= std::uint64_t{1} << i; });
  return m;
}

// Cover pairs by unpruned betweenness over every vertex.
inline std::vector<std::pair<int, int>> brute_force_cover_edges(
    const std::vector<subgraph::Subgroup>& vs) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j || !vs[i].members.is_subset_of(vs[j].members)) continue;
      bool covered = false;
      for (std::size_t k = 0; k < vs.size() && !covered; ++k) {
        if (k == i || k == j) continue;
        covered = vs[i].members.is_subset_of(vs[k].members) &&
                  vs[k].members.is_subset_of(vs[j].members) &&
                  !(vs[k].members == vs[i].members) && !(vs[k].members == vs[j].members);
      }
      if (!covered) out.emplace_back(int(i), int(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent alpha_p route: order-p elements split into (p-1)-sized classes.
inline int alpha_p_by_element_count(const subgraph::Group& g, int p) {
  int count = 0;
  for (int a = 0; a < g.order; ++a)
    if (subgraph::element_order(g, a) == p) ++count;
  return count / (p - 1);
}

// Cover pairs of the divisor lattice of n: (d, d*p) for primes p.
inline std::vector<std::pair<int, int>> divisor_cover_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  const auto divs = divisors(n);
  for (int a : divs)
    for (int b : divs) {
      if (b % a != 0 || b == a) continue;
      const int q = b / a;
      bool prime = q >= 2;
      for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
      if (prime) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace oracles
