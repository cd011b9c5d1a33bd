#pragma once

// Exhaustive labelled matroid catalog for small ground sets.

#include <vector>

#include "trophyp/matroid.hpp"

namespace trophyp {

/// Every matroid of rank d on [n], by depth-first search over basis families
/// in lexicographic order with exchange-axiom pruning.
std::vector<Matroid> all_matroids_of_rank(int n, int d);

/// Every matroid on [n] (all ranks). Practical for n <= 6.
std::vector<Matroid> all_matroids(int n);

}  // namespace trophyp
