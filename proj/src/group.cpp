#include "subgraph/group.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "subgraph/error.hpp"

namespace subgraph {

namespace {

void check_order(int n, const Limits& limits, const char* what) {
  if (n < 1)
    throw InvalidArgumentError(std::string(what) + ": invalid order " + std::to_string(n));
  if (n > limits.max_order)
    throw CapError(std::string(what) + ": order " + std::to_string(n) +
                   " exceeds the cap of " + std::to_string(limits.max_order));
}

void fill_inverses(Group& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.at(a, b) == g.identity && g.at(b, a) == g.identity) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0)
      throw InvalidArgumentError("element " + std::to_string(a) + " has no inverse");
  }
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p*q)(i) = p(q(i)): apply q first.
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

bool is_permutation(const std::vector<int>& p, int degree) {
  if (int(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

Group make_cyclic(int n, const Limits& limits) {
  check_order(n, limits, "make_cyclic");
  Group g;
  g.order = n;
  g.identity = 0;
  g.label = "C" + std::to_string(n);
  g.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[std::size_t(a) * n + b] = (a + b) % n;
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) g.inv[a] = (n - a) % n;
  return g;
}

Group make_dihedral(int n, const Limits& limits) {
  if (n < 1) throw InvalidArgumentError("make_dihedral: n must be >= 1");
  check_order(2 * n, limits, "make_dihedral");
  // indices 0..n-1: r^a; indices n..2n-1: r^a s
  Group g;
  g.order = 2 * n;
  g.identity = 0;
  g.label = "D" + std::to_string(n);
  g.mul.resize(std::size_t(g.order) * g.order);
  auto idx = [n](bool refl, int a) { return (refl ? n : 0) + a; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g.mul[std::size_t(idx(false, a)) * g.order + idx(false, b)] = idx(false, (a + b) % n);
      g.mul[std::size_t(idx(false, a)) * g.order + idx(true, b)] = idx(true, (a + b) % n);
      g.mul[std::size_t(idx(true, a)) * g.order + idx(false, b)] = idx(true, (a - b + n) % n);
      g.mul[std::size_t(idx(true, a)) * g.order + idx(true, b)] = idx(false, (a - b + n) % n);
    }
  }
  fill_inverses(g);
  return g;
}

Group make_quaternion(const Limits& limits) {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k; index = 2*axis + (sign<0).
  // Axis products with signs (axes 0=1, 1=i, 2=j, 3=k):
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int s = sign[ax][bx] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      table[a][b] = 2 * axis[ax][bx] + (s < 0 ? 1 : 0);
    }
  }
  return from_cayley_table(table, limits, "Q8");
}

Group make_symmetric(int n, const Limits& limits) {
  if (n < 1) throw InvalidArgumentError("make_symmetric: n must be >= 1");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> transposition(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      transposition[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(transposition[0], transposition[1]);
    gens.push_back(transposition);
    if (n >= 3) gens.push_back(cycle);
  }
  return from_permutation_generators(n, gens, limits, "S" + std::to_string(n));
}

Group make_alternating(int n, const Limits& limits) {
  if (n < 1) throw InvalidArgumentError("make_alternating: n must be >= 1");
  // Consecutive 3-cycles (i i+1 i+2) generate A_n.
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> c(n);
    for (int j = 0; j < n; ++j) c[j] = j;
    c[i] = i + 1;
    c[i + 1] = i + 2;
    c[i + 2] = i;
    gens.push_back(c);
  }
  return from_permutation_generators(n, gens, limits, "A" + std::to_string(n));
}

Group direct_product(const Group& g, const Group& h, const Limits& limits) {
  check_order(g.order * h.order, limits, "direct_product");
  Group p;
  p.order = g.order * h.order;
  p.identity = g.identity * h.order + h.identity;
  p.label = g.label + "x" + h.label;
  p.mul.resize(std::size_t(p.order) * p.order);
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2) {
          int lhs = a1 * h.order + b1;
          int rhs = a2 * h.order + b2;
          p.mul[std::size_t(lhs) * p.order + rhs] = g.at(a1, a2) * h.order + h.at(b1, b2);
        }
  p.inv.resize(p.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b) p.inv[a * h.order + b] = g.inv[a] * h.order + h.inv[b];
  return p;
}

Group from_permutation_generators(int degree, const std::vector<std::vector<int>>& generators,
                                  const Limits& limits, std::string label) {
  if (degree < 1) throw InvalidArgumentError("from_permutation_generators: degree must be >= 1");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!is_permutation(generators[k], degree))
      throw InvalidArgumentError("generator " + std::to_string(k) +
                                 " is not a permutation of 0.." + std::to_string(degree - 1));
  }

  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      auto next = compose(elements[i], gen);
      if (index.emplace(next, int(elements.size())).second) {
        elements.push_back(std::move(next));
        if (int(elements.size()) > limits.max_order)
          throw CapError("permutation closure exceeds the order cap of " +
                         std::to_string(limits.max_order) + " (at least " +
                         std::to_string(elements.size()) + " elements discovered)");
      }
    }
  }

  Group g;
  g.order = int(elements.size());
  g.identity = 0;
  g.label = std::move(label);
  g.mul.resize(std::size_t(g.order) * g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.mul[std::size_t(a) * g.order + b] = index.at(compose(elements[a], elements[b]));
  fill_inverses(g);
  return g;
}

Group from_cayley_table(const std::vector<std::vector<int>>& table, const Limits& limits,
                        std::string label) {
  const int n = int(table.size());
  check_order(n, limits, "from_cayley_table");
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n)
      throw InvalidArgumentError("row " + std::to_string(a) + " has " +
                                 std::to_string(table[a].size()) + " entries, expected " +
                                 std::to_string(n));
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw InvalidArgumentError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") = " + std::to_string(table[a][b]) + " is out of range");
  }

  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]]++)
        throw InvalidArgumentError("row " + std::to_string(a) + " is not a permutation");
      if (col[table[b][a]]++)
        throw InvalidArgumentError("column " + std::to_string(a) + " is not a permutation");
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw InvalidArgumentError("table has no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidArgumentError("associativity fails at triple (" + std::to_string(a) +
                                     "," + std::to_string(b) + "," + std::to_string(c) + ")");

  Group g;
  g.order = n;
  g.identity = identity;
  g.label = std::move(label);
  g.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[std::size_t(a) * n + b] = table[a][b];
  fill_inverses(g);
  return g;
}

int element_order(const Group& g, int a) {
  if (a < 0 || a >= g.order)
    throw InvalidArgumentError("element index " + std::to_string(a) + " out of range");
  int x = a, k = 1;
  while (x != g.identity) {
    x = g.at(x, a);
    ++k;
  }
  return k;
}

bool is_cyclic(const Group& g) {
  for (int a = 0; a < g.order; ++a)
    if (element_order(g, a) == g.order) return true;
  return false;
}

bool is_abelian(const Group& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

}  // namespace subgraph
