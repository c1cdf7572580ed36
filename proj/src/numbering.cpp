#include "ttp/numbering.hpp"

#include <algorithm>

namespace ttp {

namespace {

struct PairInfo {
    int u, v;  // original ids, u < v
    Weight s_sum;
};

void verify_numbering(const Instance& inst, const Matching& m, const HamiltonCycle& c, const Numbering& num);

}  // namespace

Numbering choose_numbering(const Instance& inst, const Matching& m, const HamiltonCycle& c) {
    int n = inst.n;
    if (n % 4 != 2 || n < 30)
        throw UnsupportedSize("numbering requires n = 4m+2 with n >= 30, got " + std::to_string(n));

    InstanceStats st = stats(inst);
    std::vector<PairInfo> pairs;
    for (auto [u, v] : m.pairs) pairs.push_back({u, v, st.s[u] + st.s[v]});

    // Property (a): the three pairs with smallest s-sums become the labels
    // (n-5,n-4), (n-3,n-2), (n-1,n), in ascending order of the sums.
    std::vector<int> by_s(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) by_s[i] = static_cast<int>(i);
    std::stable_sort(by_s.begin(), by_s.end(), [&](int a, int b) {
        if (pairs[a].s_sum != pairs[b].s_sum) return pairs[a].s_sum < pairs[b].s_sum;
        return pairs[a].u < pairs[b].u;
    });
    int gray_s[3] = {by_s[0], by_s[1], by_s[2]};

    // Property (b): among the remaining pairs, the one with the smallest sum
    // of distances to the six teams above becomes (n-7,n-6).
    std::vector<bool> taken(pairs.size(), false);
    for (int g : gray_s) taken[g] = true;
    auto t_pair = [&](int pi) {
        Weight t = 0;
        for (int g : gray_s)
            for (int member : {pairs[g].u, pairs[g].v}) t += inst.d[pairs[pi].u][member] + inst.d[pairs[pi].v][member];
        return t;
    };
    int gray_t = -1;
    Weight best_t = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (taken[i]) continue;
        Weight t = t_pair(static_cast<int>(i));
        if (gray_t < 0 || t < best_t || (t == best_t && pairs[i].u < pairs[gray_t].u)) {
            gray_t = static_cast<int>(i);
            best_t = t;
        }
    }
    taken[gray_t] = true;

    Numbering num;
    num.to_label.assign(n, -1);
    num.to_orig.assign(n, -1);
    auto assign_pair = [&](int pair_index0, int odd_member, int even_member) {
        // 0-based labels 2i and 2i+1 ("odd"/"even" in the 1-based sense)
        num.to_label[odd_member] = 2 * pair_index0;
        num.to_label[even_member] = 2 * pair_index0 + 1;
    };

    // Property (c): walk the cycle from the lowest team; black pairs get
    // consecutive indices in first-visit order, and within a pair the member
    // visited earlier takes the even label.
    std::vector<int> walk = c.order;
    {
        auto zero = std::find(walk.begin(), walk.end(), 0);
        std::rotate(walk.begin(), zero, walk.end());
    }
    std::vector<int> pair_of(n, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        pair_of[pairs[i].u] = static_cast<int>(i);
        pair_of[pairs[i].v] = static_cast<int>(i);
    }
    int next_black = 0;
    for (int team : walk) {
        int pi = pair_of[team];
        if (taken[pi]) continue;
        taken[pi] = true;
        int partner = pairs[pi].u == team ? pairs[pi].v : pairs[pi].u;
        assign_pair(next_black, partner, team);
        ++next_black;
    }
    if (next_black != (n - 8) / 2) throw ConstructionError("black pair labeling incomplete");

    // Gray pairs: lower original index takes the odd label.
    int q = n / 2;
    assign_pair(q - 4, pairs[gray_t].u, pairs[gray_t].v);
    assign_pair(q - 3, pairs[gray_s[0]].u, pairs[gray_s[0]].v);
    assign_pair(q - 2, pairs[gray_s[1]].u, pairs[gray_s[1]].v);
    assign_pair(q - 1, pairs[gray_s[2]].u, pairs[gray_s[2]].v);

    for (int i = 0; i < n; ++i) {
        if (num.to_label[i] < 0) throw ConstructionError("team left unlabeled");
        num.to_orig[num.to_label[i]] = i;
    }

    verify_numbering(inst, m, c, num);
    return num;
}

std::vector<Weight> t_sums(const Instance& inst, const Numbering& num) {
    int n = inst.n;
    std::vector<Weight> t(n - 6, 0);
    for (int l = 0; l < n - 6; ++l)
        for (int g = n - 6; g < n; ++g) t[l] += inst.d[num.orig(l)][num.orig(g)];
    return t;
}

std::vector<std::vector<Weight>> label_matrix(const Instance& inst, const Numbering& num) {
    int n = inst.n;
    std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d[a][b] = inst.d[num.orig(a)][num.orig(b)];
    return d;
}

Weight chained_evens_length(const Instance& inst, const Numbering& num) {
    int black_pairs = (inst.n - 8) / 2;
    Weight len = 0;
    for (int i = 0; i < black_pairs; ++i) {
        int a = num.orig(2 * i + 1);
        int b = num.orig(2 * ((i + 1) % black_pairs) + 1);
        len += inst.d[a][b];
    }
    return len;
}

namespace {

void verify_numbering(const Instance& inst, const Matching& m, const HamiltonCycle& c, const Numbering& num) {
    int n = inst.n;
    InstanceStats st = stats(inst);

    // Matching pairs must sit on consecutive labels.
    for (auto [u, v] : m.pairs) {
        int a = num.label(u), b = num.label(v);
        if (std::min(a, b) % 2 != 0 || std::max(a, b) != std::min(a, b) + 1)
            throw ConstructionError("matching pair not on consecutive labels");
    }

    // (a) with exact arithmetic: n * (s-sum of last six) <= 6 * Delta.
    Weight tail_s = 0;
    for (int l = n - 6; l < n; ++l) tail_s += st.s[num.orig(l)];
    if (static_cast<Wide>(n) * tail_s > static_cast<Wide>(6) * st.delta)
        throw ConstructionError("numbering property (a) failed");

    // (b): n(n-6) * (t(n-7)+t(n-6)) <= 12 * Delta.
    auto t = t_sums(inst, num);
    Weight tail_t = t[n - 8] + t[n - 7];
    if (static_cast<Wide>(n) * (n - 6) * tail_t > static_cast<Wide>(12) * st.delta)
        throw ConstructionError("numbering property (b) failed");

    // Selection minimality: no other pair beats the chosen gray pairs.
    std::vector<Weight> pair_s(n / 2), pair_t(n / 2, 0);
    for (int i = 0; i < n / 2; ++i)
        pair_s[i] = st.s[num.orig(2 * i)] + st.s[num.orig(2 * i + 1)];
    std::vector<Weight> sorted_s = pair_s;
    std::sort(sorted_s.begin(), sorted_s.end());
    std::vector<Weight> chosen_s = {pair_s[n / 2 - 3], pair_s[n / 2 - 2], pair_s[n / 2 - 1]};
    std::sort(chosen_s.begin(), chosen_s.end());
    for (int i = 0; i < 3; ++i)
        if (chosen_s[i] != sorted_s[i]) throw ConstructionError("gray s-pair selection not minimal");
    for (int i = 0; i < n / 2 - 3; ++i)
        pair_t[i] = t[2 * i] + t[2 * i + 1];
    for (int i = 0; i < n / 2 - 4; ++i)
        if (pair_t[i] < pair_t[n / 2 - 4]) throw ConstructionError("gray t-pair selection not minimal");

    // (c): even labels of black pairs appear along the cycle in label order.
    std::vector<int> walk = c.order;
    auto zero = std::find(walk.begin(), walk.end(), 0);
    std::rotate(walk.begin(), zero, walk.end());
    std::vector<int> evens;
    for (int team : walk) {
        int l = num.label(team);
        if (l < n - 8 && l % 2 == 1) evens.push_back(l);
    }
    for (size_t i = 0; i < evens.size(); ++i)
        if (evens[i] != static_cast<int>(2 * i + 1)) throw ConstructionError("numbering property (c) failed");
}

}  // namespace

}  // namespace ttp
