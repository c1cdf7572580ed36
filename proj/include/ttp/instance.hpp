#pragma once

#include <string>
#include <vector>

#include "ttp/common.hpp"

namespace ttp {

// A TTP instance: team count plus a symmetric distance matrix.
//
// Distances are stored as integers scaled by 10^scale_pow. Inputs with up to
// nine decimal places are representable exactly; everything downstream
// (bounds, totals, certification) is integer arithmetic on this scale.
struct Instance {
    int n = 0;
    int scale_pow = 0;
    std::vector<std::vector<Weight>> d;
    std::vector<std::string> names;
    bool triangle_ok = true;  // soft flag: violations void the guarantee but do not stop the solver

    Weight dist(int i, int j) const { return d[i][j]; }

    bool operator==(const Instance& o) const {
        return n == o.n && scale_pow == o.scale_pow && d == o.d && names == o.names;
    }
};

// File format: line 1 is n; lines 2..n+1 hold n whitespace-separated
// non-negative numbers, optionally followed by "# name".
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

bool triangle_holds(const Instance& inst);

struct InstanceStats {
    std::vector<Weight> s;  // s(i) = sum of distances from i to all others
    Weight delta = 0;       // sum of all s(i)
};

InstanceStats stats(const Instance& inst);

}  // namespace ttp
