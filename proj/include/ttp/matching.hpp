#pragma once

#include <functional>
#include <vector>

#include "ttp/common.hpp"

namespace ttp {

// Exact minimum-weight perfect matching on a complete graph with an even
// number of vertices. Returns mate[v] for every vertex. Weights must be
// non-negative. Deterministic for fixed input.
std::vector<int> min_weight_perfect_matching(int n, const std::function<Weight(int, int)>& w);

}  // namespace ttp
