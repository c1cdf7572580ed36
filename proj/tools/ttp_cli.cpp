// Command-line front end: solve / validate / bounds / oracle / bench.
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ttp/oracle.hpp"
#include "ttp/phase1.hpp"
#include "ttp/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// Small deterministic generator for bench instances.
struct SplitMix {
    unsigned long long state;
    unsigned long long next() {
        unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long below(long long m) { return static_cast<long long>(next() % static_cast<unsigned long long>(m)); }
};

ttp::Instance random_euclidean(int n, unsigned long long seed) {
    SplitMix rng{seed};
    std::vector<std::pair<long long, long long>> pts(n);
    for (auto& p : pts) p = {rng.below(10000), rng.below(10000)};
    ttp::Instance inst;
    inst.n = n;
    inst.scale_pow = 0;
    inst.names.resize(n);
    for (int i = 0; i < n; ++i) inst.names[i] = "T" + std::to_string(i + 1);
    inst.d.assign(n, std::vector<ttp::Weight>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dx = static_cast<double>(pts[i].first - pts[j].first);
            double dy = static_cast<double>(pts[i].second - pts[j].second);
            ttp::Weight d = static_cast<ttp::Weight>(std::llround(std::sqrt(dx * dx + dy * dy)));
            inst.d[i][j] = inst.d[j][i] = d;
        }
    return inst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TTP(2) tournament construction with certified distance bounds"};
    app.require_subcommand(1);

    std::string instance_path, schedule_path, out_path;
    int k = 2, jobs = 1, bench_n = 30, bench_count = 5;
    unsigned long long bench_seed = 1;
    bool allow_n6 = false;

    CLI::App* solve = app.add_subcommand("solve", "construct a schedule for an instance file");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--out", out_path, "write the schedule to this path");
    solve->add_option("--jobs", jobs, "parallel workers for the offset scan")->check(CLI::PositiveNumber);

    CLI::App* validate = app.add_subcommand("validate", "check a schedule file against an instance");
    validate->add_option("schedule", schedule_path, "schedule file")->required();
    validate->add_option("instance", instance_path, "instance file")->required();
    validate->add_option("--k", k, "consecutive home/away cap")->check(CLI::PositiveNumber);

    CLI::App* bounds = app.add_subcommand("bounds", "print the lower bounds for an instance");
    bounds->add_option("instance", instance_path, "instance file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum for tiny instances");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_flag("--allow-n6-oracle", allow_n6, "permit the slow n = 6 search");
    oracle->add_option("--out", out_path, "write the optimal schedule to this path");

    CLI::App* bench = app.add_subcommand("bench", "time the solver on random instances");
    bench->add_option("--n", bench_n, "team count");
    bench->add_option("--count", bench_count, "instance count")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "generator seed");
    bench->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            ttp::Instance inst = ttp::parse_instance(read_file(instance_path));
            if (!inst.triangle_ok)
                std::cerr << "warning: triangle inequality violated; distance guarantee void\n";
            ttp::SolveResult res = ttp::solve(inst, ttp::SolveOptions{jobs});
            if (!res.report.feasible) {
                std::cout << ttp::render_report(res.report);
                std::cerr << "no feasible schedule exists\n";
                return 1;
            }
            if (!out_path.empty()) write_file(out_path, ttp::render_schedule(res.schedule));
            std::cout << ttp::render_report(res.report);
            if (!res.report.certified) {
                for (const std::string& f : res.report.failures) std::cerr << "certification failed: " << f << "\n";
                return 1;
            }
            return 0;
        }
        if (validate->parsed()) {
            ttp::Instance inst = ttp::parse_instance(read_file(instance_path));
            ttp::Schedule sched = ttp::parse_schedule(read_file(schedule_path));
            if (sched.n != inst.n) {
                std::cerr << "schedule has " << sched.n << " teams, instance has " << inst.n << "\n";
                return 1;
            }
            bool ok = true;
            for (const std::string& e : ttp::validate_structure(sched)) {
                std::cout << "structure: " << e << "\n";
                ok = false;
            }
            if (ok) {
                ttp::DrrReport drr = ttp::validate_drr(sched);
                for (auto [i, j] : drr.missing)
                    std::cout << "missing home game: " << i + 1 << " vs " << j + 1 << "\n";
                for (auto [i, j] : drr.duplicate)
                    std::cout << "duplicate home game: " << i + 1 << " vs " << j + 1 << "\n";
                for (auto v : ttp::check_no_repeater(sched))
                    std::cout << "repeater: team " << v.team + 1 << " at slot " << v.slot + 1 << "\n";
                for (auto v : ttp::check_at_most(sched, k))
                    std::cout << "run of " << (v.home ? "home" : "away") << " games too long: team " << v.team + 1
                              << " slots " << v.begin + 1 << ".." << v.end + 1 << "\n";
                ok = drr.ok() && ttp::check_no_repeater(sched).empty() && ttp::check_at_most(sched, k).empty();
            }
            if (ok) {
                std::cout << "ok\n";
                std::cout << "total: " << ttp::format_weight(ttp::total_distance(sched, inst), inst.scale_pow)
                          << "\n";
                return 0;
            }
            return 1;
        }
        if (bounds->parsed()) {
            ttp::Instance inst = ttp::parse_instance(read_file(instance_path));
            std::cout << "n: " << inst.n << "\n";
            std::cout << "lb1: " << ttp::format_weight(ttp::lower_bound_independent(inst), inst.scale_pow) << "\n";
            std::cout << "lb2: " << ttp::format_weight(ttp::lower_bound_tree(inst), inst.scale_pow) << "\n";
            return 0;
        }
        if (oracle->parsed()) {
            ttp::Instance inst = ttp::parse_instance(read_file(instance_path));
            ttp::OracleResult res = ttp::brute_force_optimal(inst, allow_n6);
            if (!res.feasible) {
                std::cout << "infeasible\n";
                return 1;
            }
            std::cout << "optimal: " << ttp::format_weight(res.value, inst.scale_pow) << "\n";
            if (!out_path.empty()) write_file(out_path, ttp::render_schedule(res.schedule));
            return 0;
        }
        if (bench->parsed()) {
            for (int i = 0; i < bench_count; ++i) {
                ttp::Instance inst = random_euclidean(bench_n, bench_seed + i);
                auto t0 = std::chrono::steady_clock::now();
                ttp::SolveResult res = ttp::solve(inst, ttp::SolveOptions{jobs});
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                std::cout << "n=" << bench_n << " seed=" << bench_seed + i << " total=" << res.report.total
                          << " ratio=" << res.report.ratio_vs_lb1 << " certified=" << (res.report.certified ? "yes" : "no")
                          << " ms=" << ms << "\n";
            }
            return 0;
        }
    } catch (const ttp::UnsupportedSize& e) {
        std::cerr << "unsupported size: " << e.what() << "\n";
        return 2;
    } catch (const ttp::SizeTooLarge& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
