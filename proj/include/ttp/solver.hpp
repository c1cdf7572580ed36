#pragma once

#include <string>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/numbering.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

// Independent lower bound: Delta + n * d(M).
Weight lower_bound_independent(const Instance& inst);

// Spanning-tree lower bound: n * (d(T) + d(M)).
Weight lower_bound_tree(const Instance& inst);

// Closed-form distance guarantee of the construction, as an exact rational
// with denominator n: (1 + 8/n) Delta + (n+6) d(M) + 16 (d(T) + d(M)).
struct AnalysisBound {
    Weight numerator = 0;  // value = numerator / n
    int n = 1;
    double value() const { return static_cast<double>(numerator) / n; }
};

AnalysisBound analysis_upper_bound(const Instance& inst);

struct BoundsReport {
    int n = 0;
    int scale_pow = 0;
    Weight lb1 = 0;
    Weight lb2 = 0;
    AnalysisBound analysis;
    bool analysis_valid = false;  // constructive path only
    Weight total = 0;
    double ratio_vs_lb1 = 0.0;
    int offset = -1;
    std::vector<Weight> team_distances;
    bool feasible = true;  // oracle path may prove infeasibility
    bool certified = false;
    std::vector<std::string> failures;  // failed end-to-end guarantees
    std::vector<std::string> notes;     // failed intermediate analysis lemmas (guarantee may still hold)
};

struct SolveOptions {
    int jobs = 1;
};

struct SolveResult {
    Schedule schedule;  // original team indexing
    BoundsReport report;
};

// n = 4m+2, n >= 30: constructive schedule with certified bounds.
// n = 4: exhaustive optimum. Anything else: UnsupportedSize.
SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

std::string render_report(const BoundsReport& rep);

}  // namespace ttp
