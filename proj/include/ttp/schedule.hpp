#pragma once

#include <string>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

struct Game {
    int opp = -1;
    bool home = true;

    bool operator==(const Game& o) const { return opp == o.opp && home == o.home; }
};

// Per-team, per-slot table. A complete double round robin has 2(n-1) slots,
// but validators other than validate_drr accept partial schedules too.
struct Schedule {
    int n = 0;
    std::vector<std::vector<Game>> rows;  // rows[team][slot]

    int slots() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

// Structural consistency: equal row lengths, opponents in range, and the
// home/away duality (i hosts j in slot s iff j visits i in slot s).
std::vector<std::string> validate_structure(const Schedule& s);

struct DrrReport {
    std::vector<std::pair<int, int>> missing;    // ordered (host, guest) never played
    std::vector<std::pair<int, int>> duplicate;  // ordered (host, guest) played more than once
    bool ok() const { return missing.empty() && duplicate.empty(); }
};

DrrReport validate_drr(const Schedule& s);

struct RepeaterViolation {
    int team;
    int slot;  // second slot of the offending adjacent pair
};

std::vector<RepeaterViolation> check_no_repeater(const Schedule& s);

struct RunViolation {
    int team;
    int begin, end;  // inclusive slot range of the too-long run
    bool home;
};

std::vector<RunViolation> check_at_most(const Schedule& s, int k);

struct Itinerary {
    std::vector<int> venues;  // starts and ends at own home, equal neighbors collapsed
    Weight distance = 0;
};

// Venue sequence semantics: start home, play each slot at own or opponent
// venue, return home afterwards. Consecutive away games travel directly.
Itinerary per_team_itinerary(const Schedule& s, const Instance& inst, int team);
Weight team_distance(const Schedule& s, const Instance& inst, int team);
Weight total_distance(const Schedule& s, const Instance& inst);

// Schedule file: one row per team, comma-separated "<opponent>H"/"<opponent>A"
// entries with 1-based opponents.
std::string render_schedule(const Schedule& s);
Schedule parse_schedule(const std::string& text);

}  // namespace ttp
