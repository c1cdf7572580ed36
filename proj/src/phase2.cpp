#include "ttp/phase2.hpp"

#include <algorithm>
#include <set>

#include "ttp/common.hpp"

namespace ttp {

namespace {

// Fig-style seven-round table for the last eight teams, 1-based opponents.
// Every team alternates venues in the first two slots and repeats its slot-1
// venue in slot 7, which keeps the mirrored 14 slots feasible.
struct T2Cell {
    int opp;
    char venue;
};
constexpr T2Cell kT2[8][7] = {
    {{3, 'H'}, {4, 'A'}, {5, 'H'}, {2, 'A'}, {6, 'A'}, {8, 'H'}, {7, 'H'}},
    {{4, 'H'}, {3, 'A'}, {6, 'A'}, {1, 'H'}, {5, 'H'}, {7, 'A'}, {8, 'H'}},
    {{1, 'A'}, {2, 'H'}, {7, 'H'}, {4, 'A'}, {8, 'A'}, {6, 'H'}, {5, 'A'}},
    {{2, 'A'}, {1, 'H'}, {8, 'A'}, {3, 'H'}, {7, 'H'}, {5, 'A'}, {6, 'A'}},
    {{7, 'H'}, {8, 'A'}, {1, 'A'}, {6, 'H'}, {2, 'A'}, {4, 'H'}, {3, 'H'}},
    {{8, 'H'}, {7, 'A'}, {2, 'H'}, {5, 'A'}, {1, 'H'}, {3, 'A'}, {4, 'H'}},
    {{5, 'A'}, {6, 'H'}, {3, 'A'}, {8, 'H'}, {4, 'A'}, {2, 'H'}, {1, 'A'}},
    {{6, 'A'}, {5, 'H'}, {4, 'H'}, {7, 'A'}, {3, 'H'}, {1, 'A'}, {2, 'A'}},
};

int reduce_label(int v, int len) {
    return ((v % len) + len) % len;
}

}  // namespace

std::vector<std::vector<int>> remaining_opponents(int n) {
    if (n % 4 != 2 || n < 30)
        throw UnsupportedSize("remaining opponents defined for n = 4m+2, n >= 30");
    int len = n - 8;
    std::vector<std::vector<int>> r(len);
    for (int t = 0; t < len; ++t) {
        // 1-based label parity decides the difference set.
        bool odd = (t % 2 == 0);
        std::vector<int> diffs =
            odd ? std::vector<int>{-3, -2, -1, 1, 2, 3, 5} : std::vector<int>{-5, -3, -2, -1, 1, 2, 3};
        for (int dlt : diffs) r[t].push_back(reduce_label(t + dlt, len));
        std::sort(r[t].begin(), r[t].end());
    }
    for (int t = 0; t < len; ++t)
        for (int o : r[t])
            if (!std::binary_search(r[o].begin(), r[o].end(), t))
                throw ConstructionError("remaining-opponent relation is not symmetric");
    return r;
}

std::vector<std::vector<Game>> build_t1(int n, const std::vector<std::vector<int>>& r) {
    int len = n - 8;
    int q = len / 2;  // number of T1 pairs; odd for n = 4m+2
    auto a = [&](int i) { return 2 * reduce_label(i, q); };
    auto b = [&](int i) { return 2 * reduce_label(i, q) + 1; };

    std::vector<std::vector<Game>> rows(len, std::vector<Game>(7, Game{}));
    auto put = [&](int slot, int home, int away) {
        rows[home][slot] = {away, true};
        rows[away][slot] = {home, false};
    };

    // Slot 1: b_i hosts a_{i+2}.   Slot 2: a_i hosts b_{i+2}.
    for (int i = 0; i < q; ++i) put(0, b(i), a(i + 2));
    for (int i = 0; i < q; ++i) put(1, a(i), b(i + 2));

    // Slot 3: same-parity neighbors, even-indexed a-edges and odd b-edges,
    // stitched by one cross game at the wrap.
    for (int j = 0; 2 * j + 1 < q; ++j) put(2, a(2 * j), a(2 * j + 1));
    for (int j = 0; 2 * j + 2 < q; ++j) put(2, b(2 * j + 1), b(2 * j + 2));
    put(2, a(q - 1), b(0));

    // Slot 4: the shifted companion of slot 3.
    for (int j = 0; 2 * j + 2 < q; ++j) put(3, a(2 * j + 1), a(2 * j + 2));
    for (int j = 0; 2 * j + 1 < q; ++j) put(3, b(2 * j), b(2 * j + 1));
    put(3, b(q - 1), a(0));

    // Slot 5: partner games plus the two wrap edges of the same-parity rings.
    for (int i = 1; i <= q - 2; ++i) {
        if (i % 2 == 1)
            put(4, b(i), a(i));
        else
            put(4, a(i), b(i));
    }
    put(4, a(0), a(q - 1));
    put(4, b(q - 1), b(0));

    // Slots 6 and 7: cross games between adjacent pairs; slot 6 hosts at the
    // a-side, slot 7 at the b-side.
    put(5, a(0), b(0));
    put(5, a(q - 2), b(q - 1));
    put(5, a(q - 1), b(q - 2));
    for (int i = 1; i + 1 <= q - 3; i += 2) {
        put(5, a(i), b(i + 1));
        put(5, a(i + 1), b(i));
    }
    put(6, b(q - 1), a(q - 1));
    for (int i = 0; i + 1 <= q - 2; i += 2) {
        put(6, b(i + 1), a(i));
        put(6, b(i), a(i + 1));
    }

    // Postconditions: every slot is a full pairing; the union of games is
    // exactly the remaining-opponent edge set.
    std::set<std::pair<int, int>> want, got;
    for (int t = 0; t < len; ++t)
        for (int o : r[t])
            if (t < o) want.emplace(t, o);
    for (int slot = 0; slot < 7; ++slot)
        for (int t = 0; t < len; ++t) {
            const Game& g = rows[t][slot];
            if (g.opp < 0) throw ConstructionError("t1 half schedule left a hole");
            if (t < g.opp && !got.emplace(t, g.opp).second)
                throw ConstructionError("t1 half schedule repeats a pairing");
        }
    if (want != got) throw ConstructionError("t1 half schedule does not cover the remaining opponents");
    for (int t = 0; t < len; ++t) {
        if (rows[t][0].home == rows[t][1].home || rows[t][5].home == rows[t][6].home)
            throw ConstructionError("t1 half schedule breaks the alternating-end venue rule");
        int run = 1;
        for (int slot = 1; slot < 7; ++slot) {
            run = rows[t][slot].home == rows[t][slot - 1].home ? run + 1 : 1;
            if (run > 2) throw ConstructionError("t1 half schedule has a venue run longer than two");
        }
        if (rows[t][0].opp == rows[t][6].opp)
            throw ConstructionError("t1 half schedule repeats an opponent across the mirror junction");
    }
    return rows;
}

std::vector<std::vector<Game>> build_t2() {
    std::vector<std::vector<Game>> rows(8, std::vector<Game>(7));
    for (int t = 0; t < 8; ++t)
        for (int s = 0; s < 7; ++s) rows[t][s] = {kT2[t][s].opp - 1, kT2[t][s].venue == 'H'};
    return rows;
}

std::vector<std::vector<Game>> mirror_concat(const std::vector<std::vector<Game>>& half) {
    int half_slots = half.empty() ? 0 : static_cast<int>(half[0].size());
    for (const auto& row : half) {
        if (static_cast<int>(row.size()) != half_slots)
            throw JunctionViolation("mirror input rows have unequal lengths");
        if (row.front().opp == row.back().opp)
            throw JunctionViolation("mirror junction repeats an opponent");
    }
    std::vector<std::vector<Game>> full(half.size());
    for (size_t t = 0; t < half.size(); ++t) {
        full[t] = half[t];
        for (const Game& g : half[t]) full[t].push_back({g.opp, !g.home});
    }
    // No venue run of three may form across the junction.
    for (const auto& row : full)
        for (int s = half_slots - 2; s <= half_slots; ++s)
            if (s >= 1 && s + 1 < static_cast<int>(row.size()) && row[s - 1].home == row[s].home &&
                row[s].home == row[s + 1].home)
                throw JunctionViolation("mirror junction forms a venue run of three");
    return full;
}

std::vector<std::vector<Game>> build_phase2(int n) {
    auto r = remaining_opponents(n);
    auto t1 = mirror_concat(build_t1(n, r));
    auto t2 = mirror_concat(build_t2());
    std::vector<std::vector<Game>> rows(n);
    for (int t = 0; t < n - 8; ++t) rows[t] = t1[t];
    for (int t = 0; t < 8; ++t) {
        rows[n - 8 + t] = t2[t];
        for (Game& g : rows[n - 8 + t]) g.opp += n - 8;
    }
    return rows;
}

}  // namespace ttp
