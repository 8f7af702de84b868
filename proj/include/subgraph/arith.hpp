#pragma once

#include <utility>
#include <vector>

namespace subgraph {

bool is_prime(int n);

// Trial-division factorization, primes ascending. Requires n >= 1.
std::vector<std::pair<int, int>> factorize(int n);

// True iff no prime square divides n (vacuously true for n = 1).
bool is_squarefree(int n);

int ipow(int base, int exp);

}  // namespace subgraph
