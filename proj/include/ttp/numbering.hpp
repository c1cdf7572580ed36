#pragma once

#include <vector>

#include "ttp/instance.hpp"
#include "ttp/metric_graph.hpp"

namespace ttp {

// Renumbering of teams so that the minimum matching pairs carry labels
// (1,2), (3,4), ..., (n-1,n) and the three properties needed by the
// construction hold:
//   (a) s(n-5)+...+s(n) <= 6*Delta/n
//   (b) t(n-7)+t(n-6)   <= 12*Delta/(n(n-6))
//   (c) even labels 2,4,...,n-8 appear along the Hamilton cycle in order.
// Labels are 0-based internally: label 2i/2i+1 form pair i.
struct Numbering {
    std::vector<int> to_label;  // original team -> 0-based label
    std::vector<int> to_orig;   // 0-based label -> original team

    int orig(int label) const { return to_orig[label]; }
    int label(int team) const { return to_label[team]; }
};

// Requires n = 4m+2 and n >= 30. Deterministic.
Numbering choose_numbering(const Instance& inst, const Matching& m, const HamiltonCycle& c);

// t(i) = sum of distances from label i to the six teams labeled last.
// Indexed by 0-based label, defined for labels 0..n-7.
std::vector<Weight> t_sums(const Instance& inst, const Numbering& num);

// Distance matrix in label space.
std::vector<std::vector<Weight>> label_matrix(const Instance& inst, const Numbering& num);

// d(2,4)+d(4,6)+...+d(n-10,n-8)+d(n-8,2) over even labels (1-based wording);
// bounded by the Hamilton cycle length via property (c).
Weight chained_evens_length(const Instance& inst, const Numbering& num);

}  // namespace ttp
