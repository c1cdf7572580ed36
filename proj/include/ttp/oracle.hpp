#pragma once

#include "ttp/instance.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

struct OracleResult {
    bool feasible = false;
    Weight value = 0;
    Schedule schedule;  // valid only when feasible
};

// Exhaustive optimal TTP(2) solver. n = 4 by default; n = 6 only when
// explicitly allowed (it is slow). Larger sizes are refused.
OracleResult brute_force_optimal(const Instance& inst, bool allow_n6 = false);

}  // namespace ttp
