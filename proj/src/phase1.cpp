#include "ttp/phase1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ttp/common.hpp"

namespace ttp {

namespace {

struct Cell {
    int opp;
    bool home;
};

// Game grids for one block, transcribed per arc flavor. Roles 0,1 carry the
// pair whose pattern starts at home (HHAA or HAAH), roles 2,3 the opposite
// pair, roles 4,5 the intermediate pair.
constexpr Cell kHomePair[4][4] = {
    {{2, true}, {3, true}, {2, false}, {3, false}},
    {{3, true}, {2, true}, {3, false}, {2, false}},
    {{0, false}, {1, false}, {0, true}, {1, true}},
    {{1, false}, {0, false}, {1, true}, {0, true}},
};
constexpr Cell kSplitPair[4][4] = {
    {{2, true}, {3, false}, {2, false}, {3, true}},
    {{3, true}, {2, false}, {3, false}, {2, true}},
    {{0, false}, {1, true}, {0, true}, {1, false}},
    {{1, false}, {0, true}, {1, true}, {0, false}},
};
constexpr Cell kIntermediate[6][4] = {
    {{4, true}, {2, true}, {4, false}, {2, false}},
    {{3, true}, {4, true}, {3, false}, {4, false}},
    {{5, false}, {0, false}, {5, true}, {0, true}},
    {{1, false}, {5, false}, {1, true}, {5, true}},
    {{0, false}, {1, false}, {0, true}, {1, true}},
    {{2, true}, {3, true}, {2, false}, {3, false}},
};
constexpr Cell kIntermediateLast[6][4] = {
    {{4, true}, {2, false}, {4, false}, {2, true}},
    {{3, true}, {4, false}, {3, false}, {4, true}},
    {{5, false}, {0, true}, {5, true}, {0, false}},
    {{1, false}, {5, true}, {1, true}, {5, false}},
    {{0, false}, {1, true}, {0, true}, {1, false}},
    {{2, true}, {3, false}, {2, false}, {3, true}},
};

Pat word_pattern(char c) {
    switch (c) {
        case 'h': return Pat::HHAA;
        case 'a': return Pat::AAHH;
        case 'x': return Pat::HAAH;
        default: return Pat::AHHA;
    }
}

bool ends_home(Pat p) { return p == Pat::AAHH || p == Pat::HAAH; }

bool starts_home(Pat p) { return p == Pat::HHAA || p == Pat::HAAH; }

int cyc_dist(int p, int q, int ring) {
    int d = ((p - q) % ring + ring) % ring;
    return std::min(d, ring - d);
}

// Matches the black-black arc positions to the distance classes
// 3..(ring-1)/2, one arc per class.
bool match_bb(const std::vector<int>& hs, const std::vector<int>& as, int ring, size_t idx,
              std::vector<bool>& a_used, std::vector<bool>& class_used,
              std::vector<std::pair<int, int>>& out) {
    if (idx == hs.size()) return true;
    for (size_t j = 0; j < as.size(); ++j) {
        if (a_used[j]) continue;
        int d = cyc_dist(hs[idx], as[j], ring);
        if (d < 3 || class_used[d]) continue;
        a_used[j] = true;
        class_used[d] = true;
        out.emplace_back(hs[idx], as[j]);
        if (match_bb(hs, as, ring, idx + 1, a_used, class_used, out)) return true;
        out.pop_back();
        a_used[j] = false;
        class_used[d] = false;
    }
    return false;
}

}  // namespace

Phase1Layout synth_layout(int ring) {
    if (ring < 11 || ring % 2 == 0)
        throw ConstructionError("phase-1 ring needs an odd size of at least 11, got " + std::to_string(ring));
    for (bool front : {true, false}) {
        for (bool g1_on_a : {true, false}) {
            int k = g1_on_a ? (ring + 1) / 2 : (ring - 1) / 2;
            Phase1Layout lay;
            lay.ring = ring;
            lay.word.assign(ring, 'h');
            lay.word[1] = 'x';
            for (int p = 2; p <= k; ++p) lay.word[p] = 'a';
            lay.word[k + 1] = 'z';
            lay.g2pos = 1;
            lay.g3pos = k + 1;
            if (front) {
                lay.tail = 0;
                lay.head = 2;
            } else {
                lay.head = k;
                lay.tail = k + 2;
            }
            std::vector<int> g1_candidates;
            if (g1_on_a) {
                for (int p = 2; p <= k; ++p)
                    if (p != lay.head) g1_candidates.push_back(p);
            } else {
                for (int p = k + 2; p < ring; ++p)
                    if (p != lay.tail) g1_candidates.push_back(p);
                if (lay.tail != 0) g1_candidates.push_back(0);
            }
            for (int g1 : g1_candidates) {
                std::vector<int> hs, as;
                for (int p = k + 2; p < ring; ++p)
                    if (p != lay.tail && p != g1) hs.push_back(p);
                if (!front && g1 != 0) hs.push_back(0);
                for (int p = 2; p <= k; ++p)
                    if (p != lay.head && p != g1) as.push_back(p);
                if (hs.size() != as.size()) continue;
                std::vector<bool> a_used(as.size(), false), class_used(ring, false);
                std::vector<std::pair<int, int>> out;
                if (match_bb(hs, as, ring, 0, a_used, class_used, out)) {
                    lay.g1pos = g1;
                    lay.bb = out;
                    return lay;
                }
            }
        }
    }
    throw ConstructionError("no phase-1 layout found for ring size " + std::to_string(ring));
}

Pat position_pattern(const Phase1Layout& lay, int pos, bool last_block) {
    if (!last_block) return word_pattern(lay.word[pos]);
    int prev = (pos + lay.ring - 1) % lay.ring;
    return ends_home(word_pattern(lay.word[prev])) ? Pat::AHHA : Pat::HAAH;
}

std::vector<std::vector<Game>> arc_games(ArcKind kind, const std::array<int, 6>& role_team) {
    int roles = (kind == ArcKind::Intermediate || kind == ArcKind::IntermediateLast) ? 6 : 4;
    const Cell(*table)[4] = nullptr;
    switch (kind) {
        case ArcKind::HomePair: table = kHomePair; break;
        case ArcKind::SplitPair: table = kSplitPair; break;
        case ArcKind::Intermediate: table = kIntermediate; break;
        case ArcKind::IntermediateLast: table = kIntermediateLast; break;
    }
    for (int r = 0; r < roles; ++r)
        if (role_team[r] < 0) throw ConstructionError("arc role arity mismatch");
    std::vector<std::vector<Game>> games(roles, std::vector<Game>(4));
    for (int r = 0; r < roles; ++r)
        for (int s = 0; s < 4; ++s) games[r][s] = {role_team[table[r][s].opp], table[r][s].home};
    return games;
}

namespace {

void emit_arc(Phase1Build& build, int block, ArcKind kind, const std::array<int, 6>& role_team) {
    auto games = arc_games(kind, role_team);
    int roles = static_cast<int>(games.size());
    for (int r = 0; r < roles; ++r)
        for (int s = 0; s < 4; ++s) build.rows[role_team[r]][4 * block + s] = games[r][s];
    build.blocks[block].push_back({kind, role_team});
}

}  // namespace

Phase1Build build_phase1(int n, const Phase1Layout& lay, int offset) {
    int ring = lay.ring;
    if (ring != n / 2 - 4) throw ConstructionError("layout ring does not match team count");
    if (offset < 0 || offset >= ring) throw ConstructionError("offset out of range");

    Phase1Build build;
    build.rows.assign(n, std::vector<Game>(4 * ring));
    build.blocks.assign(ring, {});

    auto pair_odd = [](int p) { return 2 * p; };
    auto pair_even = [](int p) { return 2 * p + 1; };
    int g1a = n - 8, g1b = n - 7;
    int g2a = n - 6, g2b = n - 5;
    int g3a = n - 4, g3b = n - 3;
    int x_team = n - 2, y_team = n - 1;

    for (int b = 0; b < ring; ++b) {
        bool last = b == ring - 1;
        auto pair_at = [&](int pos) { return ((pos - b - offset) % ring + ring) % ring; };

        auto normal_arc = [&](int a1, int a2, Pat p1, int b1, int b2) {
            // a/b sides with patterns p1 and complement(p1)
            ArcKind kind = (p1 == Pat::HHAA || p1 == Pat::AAHH) ? ArcKind::HomePair : ArcKind::SplitPair;
            std::array<int, 6> roles{-1, -1, -1, -1, -1, -1};
            if (starts_home(p1)) {
                roles = {a1, a2, b1, b2, -1, -1};
            } else {
                roles = {b1, b2, a1, a2, -1, -1};
            }
            emit_arc(build, b, kind, roles);
        };

        // Intermediate arc with the last gray pair in the middle.
        {
            int tp = pair_at(lay.tail), hp = pair_at(lay.head);
            std::array<int, 6> roles = {pair_odd(tp), pair_even(tp), pair_odd(hp), pair_even(hp), x_team, y_team};
            emit_arc(build, b, last ? ArcKind::IntermediateLast : ArcKind::Intermediate, roles);
        }
        // Fixed gray vertices against their ring positions.
        {
            int p = pair_at(lay.g1pos);
            Pat black = position_pattern(lay, lay.g1pos, last);
            normal_arc(pair_odd(p), pair_even(p), black, g1a, g1b);
        }
        {
            int p = pair_at(lay.g2pos);
            Pat black = position_pattern(lay, lay.g2pos, last);
            normal_arc(pair_odd(p), pair_even(p), black, g2a, g2b);
        }
        {
            int p = pair_at(lay.g3pos);
            Pat black = position_pattern(lay, lay.g3pos, last);
            normal_arc(pair_odd(p), pair_even(p), black, g3a, g3b);
        }
        // Black-black arcs.
        for (auto [hp, ap] : lay.bb) {
            int ph = pair_at(hp), pa = pair_at(ap);
            Pat p1 = position_pattern(lay, hp, last);
            normal_arc(pair_odd(ph), pair_even(ph), p1, pair_odd(pa), pair_even(pa));
        }
    }
    return build;
}

void check_phase1(int n, const Phase1Build& built, const std::vector<std::vector<int>>& remaining) {
    int slots = static_cast<int>(built.rows[0].size());
    int blocks = slots / 4;
    auto fail = [](const std::string& what) { throw ConstructionError("phase-1 invariant " + what); };

    // P1: block shape and venue balance.
    if (slots != 2 * n - 16 || slots % 4 != 0) fail("P1: slot count");
    Schedule sched{n, built.rows};
    if (!validate_structure(sched).empty()) fail("P1: structural consistency");
    for (int t = 0; t < n; ++t)
        for (int b = 0; b < blocks; ++b) {
            int homes = 0;
            for (int s = 0; s < 4; ++s) {
                if (built.rows[t][4 * b + s].opp < 0) fail("P1: unfilled slot");
                homes += built.rows[t][4 * b + s].home ? 1 : 0;
            }
            if (homes != 2) fail("P1: venue balance inside a block");
        }

    // P2: both games of a meeting pair share one block with opposite venues.
    std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> meets;  // pair -> (slot, home of first)
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < slots; ++s) {
            const Game& g = built.rows[t][s];
            if (t < g.opp) meets[{t, g.opp}].emplace_back(s, g.home);
        }
    for (auto& [pr, games] : meets) {
        if (games.size() != 2) fail("P2: pair meeting count");
        if (games[0].first / 4 != games[1].first / 4) fail("P2: pair split across blocks");
        if (games[0].second == games[1].second) fail("P2: pair venues not complementary");
    }

    // P3: split-pattern arcs outside the last block only at the two
    // designated gray vertices, whose pair absorbs the surplus.
    for (int b = 0; b + 1 < blocks; ++b)
        for (const ArcInstance& arc : built.blocks[b]) {
            if (arc.kind != ArcKind::SplitPair) continue;
            bool g2_side = false, g3_side = false;
            for (int r = 0; r < 4; ++r) {
                if (arc.role_team[r] == n - 6 || arc.role_team[r] == n - 5) g2_side = true;
                if (arc.role_team[r] == n - 4 || arc.role_team[r] == n - 3) g3_side = true;
            }
            if (!g2_side && !g3_side) fail("P3: surplus arc away from gray vertices");
        }

    // P4: the intermediate roles carry the last pair, x being team n-1.
    for (int b = 0; b < blocks; ++b) {
        bool seen = false;
        for (const ArcInstance& arc : built.blocks[b]) {
            if (arc.kind != ArcKind::Intermediate && arc.kind != ArcKind::IntermediateLast) continue;
            if (arc.kind == ArcKind::IntermediateLast && b + 1 != blocks) fail("P4: last-block grid misplaced");
            if (arc.role_team[4] != n - 2 || arc.role_team[5] != n - 1) fail("P4: intermediate pair");
            seen = true;
        }
        if (!seen) fail("P4: missing intermediate arc");
    }

    // P5: unmet pairs are exactly the intra-T2 pairs plus the remaining
    // opponents of the second phase.
    std::set<std::pair<int, int>> expect;
    for (int i = n - 8; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expect.emplace(i, j);
    for (int t = 0; t < n - 8; ++t)
        for (int o : remaining[t])
            if (t < o) expect.emplace(t, o);
    std::set<std::pair<int, int>> unmet;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!meets.count({i, j})) unmet.emplace(i, j);
    if (unmet != expect) fail("P5: unmet pair set");

    // P6: every team leaves the phase on an alternating pattern.
    for (int t = 0; t < n; ++t)
        if (built.rows[t][slots - 2].home == built.rows[t][slots - 1].home) fail("P6: phase tail pattern");

    // P7: venues flip at block junctions. The two surplus-absorbing gray
    // pairs repeat a venue there by design; for them the junction run must
    // stay isolated at length two.
    for (int t = 0; t < n; ++t) {
        bool exempt = t >= n - 6 && t <= n - 3;
        for (int b = 0; b + 1 < blocks; ++b) {
            bool v1 = built.rows[t][4 * b + 3].home;
            bool v2 = built.rows[t][4 * b + 4].home;
            if (v1 != v2) continue;
            if (!exempt) fail("P7: junction venue repeat");
            if (built.rows[t][4 * b + 2].home == v1 || built.rows[t][4 * b + 5].home == v2)
                fail("P7: gray junction run too long");
        }
    }
}

Weight phase1_matching_edge_travel(const Phase1Build& built, const std::vector<std::vector<Weight>>& d) {
    int n = static_cast<int>(built.rows.size());
    int blocks = static_cast<int>(built.rows[0].size()) / 4;
    Weight sum = 0;
    for (int t = 0; t < n; ++t)
        for (int b = 0; b < blocks; ++b) {
            int at = t;
            for (int s = 0; s < 5; ++s) {
                int venue = s < 4 ? (built.rows[t][4 * b + s].home ? t : built.rows[t][4 * b + s].opp) : t;
                if (venue != at) {
                    if ((at ^ 1) == venue) sum += d[at][venue];
                    at = venue;
                }
            }
        }
    return sum;
}

Weight last_block_surplus(int n, const Phase1Layout& lay, int offset, const std::vector<std::vector<Weight>>& d) {
    int ring = lay.ring;
    int b = ring - 1;
    auto pair_at = [&](int pos) { return ((pos - b - offset) % ring + ring) % ring; };
    auto cross = [&](int p, int u, int v) {
        return d[2 * p][u] + d[2 * p][v] + d[2 * p + 1][u] + d[2 * p + 1][v];
    };
    Weight pot = 0;
    // Normal arcs: the side with isolated away games pays its four cross
    // distances. In the last block that is always the AHHA side.
    auto ahha_black = [&](int pos) { return position_pattern(lay, pos, true) == Pat::AHHA; };
    for (auto [hp, ap] : lay.bb) {
        int payer = ahha_black(hp) ? hp : ap;
        int other = payer == hp ? ap : hp;
        pot += cross(pair_at(payer), 2 * pair_at(other), 2 * pair_at(other) + 1);
    }
    for (int gpos : {lay.g1pos, lay.g2pos, lay.g3pos}) {
        int gray_lo = gpos == lay.g1pos ? n - 8 : gpos == lay.g2pos ? n - 6 : n - 4;
        // Whoever sits on the AHHA side, the surplus edges run between the
        // gray homes and the black pair of this block.
        pot += cross(pair_at(gpos), gray_lo, gray_lo + 1);
    }
    {
        int tp = pair_at(lay.tail), hp = pair_at(lay.head);
        int x = n - 2, y = n - 1;
        pot += d[x][2 * tp] + d[x][2 * tp + 1] + d[y][2 * hp] + d[y][2 * hp + 1];
        pot += d[2 * tp][2 * hp] + d[2 * tp + 1][2 * hp + 1];
    }
    return pot;
}

OffsetChoice choose_initial_position(int n, const Phase1Layout& lay,
                                     const std::vector<std::vector<Game>>& phase2,
                                     const Instance& label_inst, int jobs) {
    OffsetChoice choice;
    choice.totals.assign(lay.ring, 0);
    auto evaluate = [&](int offset) {
        Phase1Build built = build_phase1(n, lay, offset);
        Schedule full;
        full.n = n;
        full.rows.assign(n, {});
        for (int t = 0; t < n; ++t) {
            full.rows[t] = std::move(built.rows[t]);
            full.rows[t].insert(full.rows[t].end(), phase2[t].begin(), phase2[t].end());
        }
        choice.totals[offset] = total_distance(full, label_inst);
    };
    jobs = std::max(1, jobs);
    if (jobs <= 1) {
        for (int o = 0; o < lay.ring; ++o) evaluate(o);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j]() {
                for (int o = j; o < lay.ring; o += jobs) evaluate(o);
            });
        for (auto& th : pool) th.join();
    }
    for (int o = 1; o < lay.ring; ++o)
        if (choice.totals[o] < choice.totals[choice.offset]) choice.offset = o;
    return choice;
}

std::string dump_phase1(const Phase1Build& built) {
    std::ostringstream out;
    for (size_t b = 0; b < built.blocks.size(); ++b) {
        out << "block " << b + 1 << ":\n";
        for (const ArcInstance& arc : built.blocks[b]) {
            const char* kind = arc.kind == ArcKind::HomePair ? "home-pair"
                               : arc.kind == ArcKind::SplitPair ? "split-pair"
                               : arc.kind == ArcKind::Intermediate ? "intermediate"
                                                                   : "intermediate-last";
            out << "  " << kind << ":";
            for (int r = 0; r < 6; ++r)
                if (arc.role_team[r] >= 0) out << ' ' << arc.role_team[r] + 1;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace ttp
