#include "ttp/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace ttp {

std::vector<std::string> validate_structure(const Schedule& s) {
    std::vector<std::string> errs;
    if (static_cast<int>(s.rows.size()) != s.n) {
        errs.push_back("row count does not match team count");
        return errs;
    }
    int slots = s.slots();
    for (int t = 0; t < s.n; ++t)
        if (static_cast<int>(s.rows[t].size()) != slots) {
            errs.push_back("team " + std::to_string(t + 1) + " has a short row");
            return errs;
        }
    for (int t = 0; t < s.n; ++t)
        for (int sl = 0; sl < slots; ++sl) {
            const Game& g = s.rows[t][sl];
            if (g.opp < 0 || g.opp >= s.n || g.opp == t) {
                errs.push_back("team " + std::to_string(t + 1) + " slot " + std::to_string(sl + 1) +
                               " has an invalid opponent");
                continue;
            }
            const Game& back = s.rows[g.opp][sl];
            if (back.opp != t || back.home == g.home)
                errs.push_back("duality broken at team " + std::to_string(t + 1) + " slot " +
                               std::to_string(sl + 1));
        }
    return errs;
}

DrrReport validate_drr(const Schedule& s) {
    DrrReport rep;
    std::vector<std::vector<int>> host_count(s.n, std::vector<int>(s.n, 0));
    for (int t = 0; t < s.n; ++t)
        for (const Game& g : s.rows[t])
            if (g.home) ++host_count[t][g.opp];
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == j) continue;
            if (host_count[i][j] == 0) rep.missing.emplace_back(i, j);
            if (host_count[i][j] > 1) rep.duplicate.emplace_back(i, j);
        }
    return rep;
}

std::vector<RepeaterViolation> check_no_repeater(const Schedule& s) {
    std::vector<RepeaterViolation> out;
    for (int t = 0; t < s.n; ++t)
        for (int sl = 1; sl < s.slots(); ++sl)
            if (s.rows[t][sl].opp == s.rows[t][sl - 1].opp) out.push_back({t, sl});
    return out;
}

std::vector<RunViolation> check_at_most(const Schedule& s, int k) {
    std::vector<RunViolation> out;
    for (int t = 0; t < s.n; ++t) {
        int begin = 0;
        for (int sl = 1; sl <= s.slots(); ++sl) {
            if (sl == s.slots() || s.rows[t][sl].home != s.rows[t][begin].home) {
                if (sl - begin > k) out.push_back({t, begin, sl - 1, s.rows[t][begin].home});
                begin = sl;
            }
        }
    }
    return out;
}

Itinerary per_team_itinerary(const Schedule& s, const Instance& inst, int team) {
    Itinerary it;
    it.venues.push_back(team);
    int at = team;
    for (const Game& g : s.rows[team]) {
        int venue = g.home ? team : g.opp;
        if (venue != at) {
            it.distance += inst.d[at][venue];
            it.venues.push_back(venue);
            at = venue;
        }
    }
    if (at != team) {
        it.distance += inst.d[at][team];
        it.venues.push_back(team);
    }
    return it;
}

Weight team_distance(const Schedule& s, const Instance& inst, int team) {
    return per_team_itinerary(s, inst, team).distance;
}

Weight total_distance(const Schedule& s, const Instance& inst) {
    Weight total = 0;
    for (int t = 0; t < s.n; ++t) total += team_distance(s, inst, t);
    return total;
}

std::string render_schedule(const Schedule& s) {
    std::ostringstream out;
    for (int t = 0; t < s.n; ++t) {
        for (int sl = 0; sl < s.slots(); ++sl) {
            if (sl) out << ',';
            out << s.rows[t][sl].opp + 1 << (s.rows[t][sl].home ? 'H' : 'A');
        }
        out << "\n";
    }
    return out.str();
}

Schedule parse_schedule(const std::string& text) {
    Schedule s;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Game> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            size_t b = cell.find_first_not_of(" \t\r");
            size_t e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw ParseError("empty schedule cell");
            cell = cell.substr(b, e - b + 1);
            char venue = cell.back();
            if (venue != 'H' && venue != 'A') throw ParseError("schedule cell '" + cell + "' must end in H or A");
            int opp = 0;
            try {
                size_t pos = 0;
                opp = std::stoi(cell.substr(0, cell.size() - 1), &pos);
                if (pos != cell.size() - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("schedule cell '" + cell + "' has a malformed opponent");
            }
            row.push_back({opp - 1, venue == 'H'});
        }
        s.rows.push_back(std::move(row));
    }
    s.n = static_cast<int>(s.rows.size());
    if (s.n == 0) throw ParseError("empty schedule file");
    for (auto& row : s.rows)
        for (auto& g : row)
            if (g.opp < 0 || g.opp >= s.n) throw ParseError("schedule opponent out of range");
    return s;
}

}  // namespace ttp
