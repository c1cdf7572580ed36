#include "ttp/oracle.hpp"

#include <algorithm>

namespace ttp {

namespace {

struct Search {
    const Instance& inst;
    int n, slots;
    std::vector<std::vector<bool>> needed;  // needed[host][guest]
    std::vector<std::vector<Game>> rows;
    std::vector<int> at;          // current venue per team
    std::vector<int> last_opp;    // opponent in the previous slot
    std::vector<int> run_len;     // current home/away run length
    std::vector<bool> run_home;
    Weight cost = 0;
    Weight remaining_bound = 0;   // sum of d[t][opp] over unplayed away games
    bool found = false;
    Weight best = 0;
    std::vector<std::vector<Game>> best_rows;

    explicit Search(const Instance& inst_) : inst(inst_), n(inst_.n), slots(2 * (inst_.n - 1)) {
        needed.assign(n, std::vector<bool>(n, true));
        for (int i = 0; i < n; ++i) needed[i][i] = false;
        rows.assign(n, std::vector<Game>(slots, Game{-1, true}));
        at.assign(n, 0);
        for (int i = 0; i < n; ++i) at[i] = i;
        last_opp.assign(n, -1);
        run_len.assign(n, 0);
        run_home.assign(n, true);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) remaining_bound += inst.d[j][i];  // guest j visits host i once
    }

    bool venue_ok(int t, bool home) const {
        return run_len[t] < 2 || run_home[t] != home;
    }

    void play(int host, int guest, int slot) {
        needed[host][guest] = false;
        rows[host][slot] = {guest, true};
        rows[guest][slot] = {host, false};
        remaining_bound -= inst.d[guest][host];
        for (int t : {host, guest}) {
            bool home = t == host;
            int venue = home ? t : host;
            cost += inst.d[at[t]][venue];
            at[t] = venue;
            run_len[t] = (run_len[t] > 0 && run_home[t] == home) ? run_len[t] + 1 : 1;
            run_home[t] = home;
            last_opp[t] = home ? guest : host;
        }
    }

    struct Undo {
        int host, guest;
        std::array<int, 2> at, run_len, last_opp;
        std::array<bool, 2> run_home;
        Weight cost;
        Weight remaining;
    };

    Undo save(int host, int guest) const {
        return {host,
                guest,
                {at[host], at[guest]},
                {run_len[host], run_len[guest]},
                {last_opp[host], last_opp[guest]},
                {run_home[host], run_home[guest]},
                cost,
                remaining_bound};
    }

    void restore(const Undo& u, int slot) {
        needed[u.host][u.guest] = true;
        rows[u.host][slot] = {-1, true};
        rows[u.guest][slot] = {-1, true};
        at[u.host] = u.at[0];
        at[u.guest] = u.at[1];
        run_len[u.host] = u.run_len[0];
        run_len[u.guest] = u.run_len[1];
        last_opp[u.host] = u.last_opp[0];
        last_opp[u.guest] = u.last_opp[1];
        run_home[u.host] = u.run_home[0];
        run_home[u.guest] = u.run_home[1];
        cost = u.cost;
        remaining_bound = u.remaining;
    }

    Weight final_cost() const {
        Weight c = cost;
        for (int t = 0; t < n; ++t) c += inst.d[at[t]][t];
        return c;
    }

    bool pruned() const {
        if (!found) return false;
        // The per-visit bound rests on the triangle inequality; without it
        // only the nonnegative accumulated cost may prune.
        Weight bound = inst.triangle_ok ? remaining_bound : 0;
        return cost + bound >= best;
    }

    void fill_slot(int slot, std::vector<bool>& busy, int from) {
        if (pruned()) return;
        int t = from;
        while (t < n && busy[t]) ++t;
        if (t == n) {
            next_slot(slot + 1);
            return;
        }
        busy[t] = true;
        for (int o = t + 1; o < n; ++o) {
            if (busy[o]) continue;
            if (last_opp[t] == o) continue;  // no-repeater (symmetric)
            for (int host : {t, o}) {
                int guest = host == t ? o : t;
                if (!needed[host][guest]) continue;
                if (!venue_ok(host, true) || !venue_ok(guest, false)) continue;
                busy[o] = true;
                Undo u = save(host, guest);
                play(host, guest, slot);
                fill_slot(slot, busy, t + 1);
                restore(u, slot);
                busy[o] = false;
            }
        }
        busy[t] = false;
    }

    void next_slot(int slot) {
        if (slot == slots) {
            Weight c = final_cost();
            if (!found || c < best) {
                found = true;
                best = c;
                best_rows = rows;
            }
            return;
        }
        std::vector<bool> busy(n, false);
        fill_slot(slot, busy, 0);
    }
};

}  // namespace

OracleResult brute_force_optimal(const Instance& inst, bool allow_n6) {
    if (inst.n != 4 && !(inst.n == 6 && allow_n6))
        throw SizeTooLarge("exhaustive solver accepts n = 4 (n = 6 behind a flag), got n = " +
                           std::to_string(inst.n));
    Search search(inst);
    search.next_slot(0);
    OracleResult res;
    res.feasible = search.found;
    if (search.found) {
        res.value = search.best;
        res.schedule = Schedule{inst.n, search.best_rows};
    }
    return res;
}

}  // namespace ttp
