#pragma once

#include <vector>

#include "hypograph/graph.hpp"

namespace hypograph {

/// One representative per isomorphism class of n-vertex graphs (1 <= n <= 8),
/// ordered by canonical key. Built by augmenting the (n-1)-vertex classes
/// with every attachment neighborhood and deduplicating by canonical key.
std::vector<SimpleGraph> enumerate_graphs(int n);

}  // namespace hypograph
