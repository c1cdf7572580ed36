#pragma once

#include <array>
#include <string>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

// Four-slot game grids for one arc of the first-phase layout. Normal arcs
// carry two team pairs (roles 1-4), intermediate arcs additionally carry the
// pair on the mid-arc vertex (roles x, y).
enum class ArcKind { HomePair, SplitPair, Intermediate, IntermediateLast };

// roles: 0,1 = first pair (odd,even), 2,3 = second pair, 4,5 = x,y.
std::vector<std::vector<Game>> arc_games(ArcKind kind, const std::array<int, 6>& role_team);

// Home/away pattern a vertex plays inside one block.
enum class Pat { HHAA, AAHH, HAAH, AHHA };

// Positions 0..N-1 of the rotation ring for the N = n/2-4 black pairs. The
// four gray pairs sit off-ring: g1..g3 attach to fixed positions, the last
// pair is the intermediate vertex of the arc between tail and head.
struct Phase1Layout {
    int ring = 0;                          // N
    std::vector<char> word;                // per position: 'h','a','x','z'
    int tail = 0, head = 0;                // intermediate arc endpoints, |head-tail| = 2 cyclically
    int g1pos = 0, g2pos = 0, g3pos = 0;   // black partners of the fixed gray vertices
    std::vector<std::pair<int, int>> bb;   // black-black arcs (h-side, a-side)
};

// Deterministic synthesis of a layout satisfying the construction contract.
Phase1Layout synth_layout(int ring);

Pat position_pattern(const Phase1Layout& lay, int pos, bool last_block);

struct ArcInstance {
    ArcKind kind;
    std::array<int, 6> role_team;  // unused roles = -1
};

struct Phase1Build {
    std::vector<std::vector<Game>> rows;        // n x (2n-16), label space
    std::vector<std::vector<ArcInstance>> blocks;
};

// Builds the first 2n-16 slots for the given rotation offset (label space).
Phase1Build build_phase1(int n, const Phase1Layout& lay, int offset);

// Machine checks P1..P7; throws ConstructionError naming the first failed
// invariant. remaining = remaining_opponents(n).
void check_phase1(int n, const Phase1Build& built, const std::vector<std::vector<int>>& remaining);

// Travel across matching edges in block-local itineraries; the layout keeps
// this at most two traversals per matching edge per block.
Weight phase1_matching_edge_travel(const Phase1Build& built, const std::vector<std::vector<Weight>>& d);

// Last-block surplus attributable to one offset (disjoint across offsets).
Weight last_block_surplus(int n, const Phase1Layout& lay, int offset, const std::vector<std::vector<Weight>>& d);

struct OffsetChoice {
    int offset = 0;
    std::vector<Weight> totals;  // final-schedule distance per offset
};

// Evaluates every rotation offset by total distance of the full schedule
// (first phase plus the given second-phase rows) and returns the minimizer.
OffsetChoice choose_initial_position(int n, const Phase1Layout& lay,
                                     const std::vector<std::vector<Game>>& phase2,
                                     const Instance& label_inst, int jobs = 1);

std::string dump_phase1(const Phase1Build& built);

}  // namespace ttp
