#include "doctest.h"
#include "testutil.hpp"
#include "ttp/instance.hpp"
#include "ttp/phase2.hpp"
#include "ttp/schedule.hpp"

using namespace ttp;

namespace {

Schedule t2_mirrored() {
    Schedule s;
    s.n = 8;
    s.rows = mirror_concat(build_t2());
    return s;
}

}  // namespace

TEST_CASE("the mirrored eight-team fixture passes every validator") {
    Schedule s = t2_mirrored();
    CHECK(validate_structure(s).empty());
    CHECK(validate_drr(s).ok());
    CHECK(check_no_repeater(s).empty());
    CHECK(check_at_most(s, 2).empty());
}

TEST_CASE("validate_drr flags duplicates and missing pairs") {
    Schedule s = t2_mirrored();
    // Re-point one of team 1's away games onto an opponent it already hosts.
    // Slot 4 (0-based 3) has 1 at 2's home; swap the half-series so team 1
    // hosts team 2 twice: flip venues of the slot-3 game pair.
    s.rows[0][3] = {1, true};
    s.rows[1][3] = {0, false};
    DrrReport rep = validate_drr(s);
    CHECK_FALSE(rep.ok());
    CHECK(std::find(rep.duplicate.begin(), rep.duplicate.end(), std::make_pair(0, 1)) != rep.duplicate.end());
    CHECK(std::find(rep.missing.begin(), rep.missing.end(), std::make_pair(1, 0)) != rep.missing.end());
}

TEST_CASE("no-repeater catches adjacent rematches") {
    Schedule s;
    s.n = 4;
    s.rows.assign(4, {});
    // 1 meets 3 twice in a row.
    s.rows[0] = {{2, true}, {2, false}};
    s.rows[2] = {{0, false}, {0, true}};
    s.rows[1] = {{3, true}, {3, false}};
    s.rows[3] = {{1, false}, {1, true}};
    auto violations = check_no_repeater(s);
    CHECK(violations.size() == 4);
    CHECK(violations[0].team == 0);
    CHECK(violations[0].slot == 1);
}

TEST_CASE("arc grids pass the block-level validators") {
    // Split-pattern arc: 1: 3H 4A 3A 4H.
    Schedule split;
    split.n = 4;
    split.rows = {
        {{2, true}, {3, false}, {2, false}, {3, true}},
        {{3, true}, {2, false}, {3, false}, {2, true}},
        {{0, false}, {1, true}, {0, true}, {1, false}},
        {{1, false}, {0, true}, {1, true}, {0, false}},
    };
    CHECK(validate_structure(split).empty());
    CHECK(check_no_repeater(split).empty());
    CHECK(check_at_most(split, 2).empty());

    // Home-block arc pattern H H A A per team.
    Schedule home;
    home.n = 4;
    home.rows = {
        {{2, true}, {3, true}, {2, false}, {3, false}},
        {{3, true}, {2, true}, {3, false}, {2, false}},
        {{0, false}, {1, false}, {0, true}, {1, true}},
        {{1, false}, {0, false}, {1, true}, {0, true}},
    };
    CHECK(validate_structure(home).empty());
    CHECK(check_at_most(home, 2).empty());
}

TEST_CASE("at-most validator is generic in k") {
    Schedule s;
    s.n = 2;
    s.rows = {{{1, true}, {1, true}, {1, true}}, {{0, false}, {0, false}, {0, false}}};
    CHECK(check_at_most(s, 2).size() == 2);
    CHECK(check_at_most(s, 3).empty());
    auto v = check_at_most(s, 2);
    CHECK(v[0].begin == 0);
    CHECK(v[0].end == 2);
}

TEST_CASE("itinerary with shortcuts on consecutive away games") {
    Instance inst = parse_instance("4\n0 1 2 3\n1 0 2 3\n2 2 0 3\n3 3 3 0\n");
    Schedule s;
    s.n = 4;
    s.rows.assign(4, {});
    s.rows[0] = {{1, false}, {2, false}, {3, true}};
    s.rows[1] = {{0, true}, {3, false}, {2, true}};
    s.rows[2] = {{3, true}, {0, true}, {1, false}};
    s.rows[3] = {{2, false}, {1, true}, {0, false}};
    CHECK(validate_structure(s).empty());
    // Team 1 travels home -> 2 -> 3 -> home: 1 + 2 + 2 = 5.
    CHECK(team_distance(s, inst, 0) == 5);
    Itinerary it = per_team_itinerary(s, inst, 0);
    CHECK(it.venues == std::vector<int>{0, 1, 2, 0});

    // All-home prefix costs nothing.
    Schedule hs;
    hs.n = 4;
    hs.rows.assign(4, {});
    hs.rows[0] = {{1, true}, {2, true}};
    hs.rows[1] = {{0, false}, {3, true}};
    hs.rows[2] = {{3, true}, {0, false}};
    hs.rows[3] = {{2, false}, {1, false}};
    CHECK(team_distance(hs, inst, 0) == 0);
}

TEST_CASE("every team's travel dominates its star sum on feasible schedules") {
    Instance inst = testutil::euclidean_instance(8, 99);
    Schedule s = t2_mirrored();
    InstanceStats st = stats(inst);
    for (int t = 0; t < 8; ++t) CHECK(team_distance(s, inst, t) >= st.s[t]);
}

TEST_CASE("schedule text round trip") {
    Schedule s = t2_mirrored();
    Schedule back = parse_schedule(render_schedule(s));
    CHECK(back.n == s.n);
    CHECK(back.rows == s.rows);
    CHECK_THROWS_AS(parse_schedule("3X,2H\n"), ParseError);
    CHECK_THROWS_AS(parse_schedule(""), ParseError);
}
