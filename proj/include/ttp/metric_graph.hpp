#pragma once

#include <utility>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // n/2 unordered pairs, first < second
    std::vector<int> mate;                   // partner per team
    Weight weight = 0;
};

struct SpanningTree {
    std::vector<std::pair<int, int>> edges;  // n-1 edges, first < second
    Weight weight = 0;
};

struct HamiltonCycle {
    std::vector<int> order;  // every team exactly once; wraps around
    Weight length = 0;
};

// Kruskal with ties broken by lexicographic edge order.
SpanningTree min_spanning_tree(const Instance& inst);

// Exact minimum weight perfect matching over all teams.
Matching min_perfect_matching(const Instance& inst);

// MST + exact minimum matching on odd-degree tree vertices + Euler tour,
// shortcut in first-visit order from the lowest team index.
HamiltonCycle christofides_cycle(const Instance& inst, const SpanningTree& tree);

Weight cycle_length(const Instance& inst, const std::vector<int>& order);

}  // namespace ttp
