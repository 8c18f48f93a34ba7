#pragma once

#include "trackcube/bits.hpp"

namespace trackcube {

inline constexpr long long kDefaultCliqueBudget = 10'000'000;

// Exact maximum clique size of the graph given by a symmetric adjacency
// matrix (diagonal ignored). Branch and bound with greedy pivoting; throws
// InstanceTooLarge when more than `node_budget` search nodes are expanded.
int max_clique(const BitMatrix& adj, long long node_budget = kDefaultCliqueBudget);

} // namespace trackcube
