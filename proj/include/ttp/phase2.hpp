#pragma once

#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

// Opponents each T1 team still has to play after the first phase. 0-based
// labels; T1 = labels 0..n-9, cyclic reduction modulo n-8.
std::vector<std::vector<int>> remaining_opponents(int n);

// Seven-slot half schedule on T1 covering exactly the remaining-opponent
// edges, with alternating venues in slots 1-2 and 6-7 and runs of at most
// two. rows are indexed by T1 label.
std::vector<std::vector<Game>> build_t1(int n, const std::vector<std::vector<int>>& r);

// The fixed seven-slot single round robin for the last eight teams
// (0-based opponents within the eight-team block).
std::vector<std::vector<Game>> build_t2();

// Appends a venue-flipped copy of the half schedule; checks the junction.
std::vector<std::vector<Game>> mirror_concat(const std::vector<std::vector<Game>>& half);

// Full 14-slot phase: T1 and T2 side by side in label space.
std::vector<std::vector<Game>> build_phase2(int n);

}  // namespace ttp
