#include "ttp/solver.hpp"

#include <algorithm>
#include <sstream>

#include "ttp/oracle.hpp"
#include "ttp/phase1.hpp"
#include "ttp/phase2.hpp"

namespace ttp {

namespace {

struct GraphParts {
    InstanceStats st;
    SpanningTree tree;
    Matching matching;
};

GraphParts graph_parts(const Instance& inst) {
    return {stats(inst), min_spanning_tree(inst), min_perfect_matching(inst)};
}

std::string fmt(Weight v, int scale_pow) { return format_weight(v, scale_pow); }

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

Weight lower_bound_independent(const Instance& inst) {
    GraphParts parts = graph_parts(inst);
    return parts.st.delta + static_cast<Weight>(inst.n) * parts.matching.weight;
}

Weight lower_bound_tree(const Instance& inst) {
    GraphParts parts = graph_parts(inst);
    return static_cast<Weight>(inst.n) * (parts.tree.weight + parts.matching.weight);
}

AnalysisBound analysis_upper_bound(const Instance& inst) {
    GraphParts parts = graph_parts(inst);
    AnalysisBound ab;
    ab.n = inst.n;
    Weight n = inst.n;
    ab.numerator = (n + 8) * parts.st.delta + n * (n + 6) * parts.matching.weight +
                   16 * n * (parts.tree.weight + parts.matching.weight);
    return ab;
}

namespace {

SolveResult solve_by_oracle(const Instance& inst) {
    OracleResult oracle = brute_force_optimal(inst);
    GraphParts parts = graph_parts(inst);

    SolveResult res;
    BoundsReport& rep = res.report;
    rep.n = inst.n;
    rep.scale_pow = inst.scale_pow;
    rep.lb1 = parts.st.delta + static_cast<Weight>(inst.n) * parts.matching.weight;
    rep.lb2 = static_cast<Weight>(inst.n) * (parts.tree.weight + parts.matching.weight);
    rep.analysis_valid = false;
    rep.feasible = oracle.feasible;
    if (!oracle.feasible) {
        rep.certified = false;
        rep.failures.push_back("no feasible schedule exists at this size");
        return res;
    }
    res.schedule = oracle.schedule;
    rep.total = oracle.value;
    rep.team_distances.resize(inst.n);
    for (int t = 0; t < inst.n; ++t) rep.team_distances[t] = team_distance(res.schedule, inst, t);
    rep.ratio_vs_lb1 = rep.lb1 > 0 ? static_cast<double>(rep.total) / static_cast<double>(rep.lb1) : 1.0;

    if (!validate_structure(res.schedule).empty() || !validate_drr(res.schedule).ok() ||
        !check_no_repeater(res.schedule).empty() || !check_at_most(res.schedule, 2).empty())
        throw ConstructionError("exhaustive schedule failed validation");
    if (rep.total < rep.lb2) throw ConstructionError("exhaustive optimum beats the tree lower bound");
    rep.certified = true;
    return res;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
    int n = inst.n;
    if (n == 4) return solve_by_oracle(inst);
    if (n % 4 != 2 || n < 30)
        throw UnsupportedSize("unsupported size n = " + std::to_string(n) +
                              " (constructive path needs n = 4m+2 with n >= 30; n = 4 is exhaustive)");

    GraphParts parts = graph_parts(inst);
    HamiltonCycle cycle = christofides_cycle(inst, parts.tree);
    Numbering num = choose_numbering(inst, parts.matching, cycle);
    auto d_lab = label_matrix(inst, num);

    Instance lab;  // label-space view used by the distance engine
    lab.n = n;
    lab.scale_pow = inst.scale_pow;
    lab.d = d_lab;
    lab.names.assign(n, "");
    lab.triangle_ok = inst.triangle_ok;

    auto remaining = remaining_opponents(n);
    auto phase2 = build_phase2(n);
    Phase1Layout layout = synth_layout(n / 2 - 4);
    int ring = layout.ring;

    // Every rotation offset is evaluated by final total distance.
    OffsetChoice choice = choose_initial_position(n, layout, phase2, lab, opts.jobs);
    int best_offset = choice.offset;

    Phase1Build built = build_phase1(n, layout, best_offset);
    Schedule label_sched;
    label_sched.n = n;
    label_sched.rows.assign(n, {});
    for (int t = 0; t < n; ++t) {
        label_sched.rows[t] = built.rows[t];
        label_sched.rows[t].insert(label_sched.rows[t].end(), phase2[t].begin(), phase2[t].end());
    }
    check_phase1(n, built, remaining);
    {
        auto errs = validate_structure(label_sched);
        if (!errs.empty()) throw ConstructionError("constructed schedule inconsistent: " + errs.front());
        if (!validate_drr(label_sched).ok()) throw ConstructionError("constructed schedule is not a double round robin");
        if (!check_no_repeater(label_sched).empty()) throw ConstructionError("constructed schedule has a repeater");
        if (!check_at_most(label_sched, 2).empty()) throw ConstructionError("constructed schedule breaks at-most-2");
    }

    Weight delta = parts.st.delta;
    Weight dm = parts.matching.weight;
    Weight dt = parts.tree.weight;
    Weight lb1 = delta + static_cast<Weight>(n) * dm;
    Weight lb2 = static_cast<Weight>(n) * (dt + dm);
    if (lb1 < lb2) throw ConstructionError("independent bound fell below the tree bound");

    // Inequality used by the closed-form assembly; exact in cross-multiplied
    // form Delta*n*(n-6) + 12*Delta*(n-8) <= 2*Delta*(n-6)*(n-8).
    {
        Wide lhs = static_cast<Wide>(delta) * n * (n - 6) + static_cast<Wide>(12) * delta * (n - 8);
        Wide rhs = static_cast<Wide>(2) * delta * (n - 6) * (n - 8);
        if (lhs > rhs) throw ConstructionError("size inequality violated");
    }

    // Matching-edge traffic in the first phase: at most two traversals per
    // matching edge per block.
    if (phase1_matching_edge_travel(built, d_lab) > static_cast<Weight>(n - 8) * dm)
        throw ConstructionError("matching-edge traffic exceeds the per-block budget");

    // Last-block surplus pot: disjoint across offsets, so the sum stays
    // within Delta/2 and the minimum within Delta/(n-8).
    {
        Weight pot_sum = 0, pot_min = 0;
        for (int o = 0; o < ring; ++o) {
            Weight pot = last_block_surplus(n, layout, o, d_lab);
            pot_sum += pot;
            pot_min = o == 0 ? pot : std::min(pot_min, pot);
        }
        if (2 * pot_sum > delta) throw ConstructionError("offset surplus pots overlap");
        if (static_cast<Wide>(pot_min) * (n - 8) > static_cast<Wide>(delta))
            throw ConstructionError("best offset surplus exceeds its average bound");
    }

    SolveResult res;
    BoundsReport& rep = res.report;
    rep.n = n;
    rep.scale_pow = inst.scale_pow;
    rep.lb1 = lb1;
    rep.lb2 = lb2;
    rep.analysis.n = n;
    rep.analysis.numerator =
        (static_cast<Weight>(n) + 8) * delta + static_cast<Weight>(n) * (n + 6) * dm + 16 * static_cast<Weight>(n) * (dt + dm);
    rep.analysis_valid = true;
    rep.offset = best_offset;
    rep.total = choice.totals[best_offset];

    // Certification: the two delivered guarantees, checked exactly. The
    // intermediate analysis lemmas are re-measured too; on clustered metrics
    // they can fail while the end bounds still hold, so they only annotate.
    {
        Weight chain = chained_evens_length(inst, num);
        if (chain > dt + dm) rep.notes.push_back("even-chain length exceeds d(T)+d(M)");

        Schedule p2{n, phase2};
        Weight t1_surplus = 0;
        for (int t = 0; t < n - 8; ++t) {
            Weight travel = team_distance(p2, lab, t);
            Weight singles = 0;
            for (int o : remaining[t]) singles += d_lab[t][o];
            t1_surplus += travel - singles;
        }
        if (t1_surplus > 14 * dm + 16 * (dt + dm))
            rep.notes.push_back("second-phase travel of the first group exceeds its lemma budget");

        if (static_cast<Wide>(rep.total) * n > static_cast<Wide>(rep.analysis.numerator))
            rep.failures.push_back("total exceeds the closed-form distance bound");
        if (static_cast<Wide>(rep.total) * n > static_cast<Wide>(n + 24) * lb1)
            rep.failures.push_back("total exceeds (1 + 24/n) times the independent bound");
    }
    rep.certified = rep.failures.empty();

    // Translate back to the original team order.
    res.schedule.n = n;
    res.schedule.rows.assign(n, {});
    for (int l = 0; l < n; ++l) {
        int team = num.orig(l);
        res.schedule.rows[team].reserve(label_sched.rows[l].size());
        for (const Game& g : label_sched.rows[l]) res.schedule.rows[team].push_back({num.orig(g.opp), g.home});
    }
    rep.team_distances.resize(n);
    Weight check_total = 0;
    for (int t = 0; t < n; ++t) {
        rep.team_distances[t] = team_distance(res.schedule, inst, t);
        check_total += rep.team_distances[t];
    }
    if (check_total != rep.total) throw ConstructionError("relabeling changed the total distance");
    rep.ratio_vs_lb1 = rep.lb1 > 0 ? static_cast<double>(rep.total) / static_cast<double>(rep.lb1) : 1.0;
    return res;
}

std::string render_report(const BoundsReport& rep) {
    std::ostringstream out;
    out << "n: " << rep.n << "\n";
    out << "lb1: " << fmt(rep.lb1, rep.scale_pow) << "\n";
    out << "lb2: " << fmt(rep.lb2, rep.scale_pow) << "\n";
    if (rep.analysis_valid) {
        double scale = 1.0;
        for (int i = 0; i < rep.scale_pow; ++i) scale *= 10.0;
        out << "analysis_bound: " << fixed6(rep.analysis.value() / scale) << "\n";
    } else {
        out << "analysis_bound: n/a\n";
    }
    if (!rep.feasible) {
        out << "total: infeasible\n";
        return out.str();
    }
    out << "total: " << fmt(rep.total, rep.scale_pow) << "\n";
    out << "ratio_vs_lb1: " << fixed6(rep.ratio_vs_lb1) << "\n";
    out << "offset: " << (rep.offset >= 0 ? std::to_string(rep.offset) : std::string("n/a")) << "\n";
    out << "team_distances:";
    for (Weight v : rep.team_distances) out << ' ' << fmt(v, rep.scale_pow);
    out << "\n";
    out << "certified: " << (rep.certified ? "yes" : "no") << "\n";
    for (const std::string& f : rep.failures) out << "uncertified: " << f << "\n";
    for (const std::string& f : rep.notes) out << "analysis_note: " << f << "\n";
    return out.str();
}

}  // namespace ttp
