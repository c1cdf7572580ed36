#include "doctest.h"
#include "testutil.hpp"
#include "ttp/matching.hpp"

using namespace ttp;

namespace {

Weight matching_weight(const Instance& inst, const std::vector<int>& mate) {
    Weight w = 0;
    for (int i = 0; i < inst.n; ++i)
        if (i < mate[i]) w += inst.d[i][mate[i]];
    return w;
}

}  // namespace

TEST_CASE("blossom equals exhaustive enumeration on random weights") {
    for (int n : {4, 6, 8, 10}) {
        for (unsigned long long seed = 0; seed < 60; ++seed) {
            Instance inst = testutil::random_metric_instance(n, 1000 * n + seed);
            auto mate = min_weight_perfect_matching(inst.n, [&](int a, int b) { return inst.d[a][b]; });
            CHECK(matching_weight(inst, mate) == testutil::exhaustive_min_matching(inst));
        }
    }
}

TEST_CASE("blossom handles degenerate weights") {
    for (int n : {4, 6, 8, 10, 12}) {
        Instance unit = testutil::unit_instance(n);
        auto mate = min_weight_perfect_matching(n, [&](int a, int b) { return unit.d[a][b]; });
        CHECK(matching_weight(unit, mate) == n / 2);

        Instance zero = testutil::zero_instance(n);
        mate = min_weight_perfect_matching(n, [&](int a, int b) { return zero.d[a][b]; });
        CHECK(matching_weight(zero, mate) == 0);
    }
    // Clustered points: matching must stay inside the clusters.
    for (unsigned long long seed = 0; seed < 20; ++seed) {
        testutil::SplitMix rng(777 + seed);
        int n = 8;
        Instance inst = testutil::zero_instance(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool same = (i < n / 2) == (j < n / 2);
                Weight w = same ? rng.below(5) : 100000 + rng.below(5);
                inst.d[i][j] = inst.d[j][i] = w;
            }
        auto mate = min_weight_perfect_matching(n, [&](int a, int b) { return inst.d[a][b]; });
        CHECK(matching_weight(inst, mate) == testutil::exhaustive_min_matching(inst));
    }
}

TEST_CASE("blossom stays exact at solver sizes (adversarial random)") {
    for (int n : {12, 14}) {
        for (unsigned long long seed = 0; seed < 10; ++seed) {
            Instance inst = testutil::random_metric_instance(n, 999 * n + seed, 50);
            auto mate = min_weight_perfect_matching(inst.n, [&](int a, int b) { return inst.d[a][b]; });
            CHECK(matching_weight(inst, mate) == testutil::exhaustive_min_matching(inst));
        }
    }
    // Larger sizes against the subset-DP route; small weight ranges provoke
    // heavy ties and blossom shrinking.
    for (int n : {16, 18, 20}) {
        for (unsigned long long seed = 0; seed < 6; ++seed) {
            Instance inst = testutil::random_metric_instance(n, 4321 * n + seed, 12);
            auto mate = min_weight_perfect_matching(inst.n, [&](int a, int b) { return inst.d[a][b]; });
            CHECK(matching_weight(inst, mate) == testutil::dp_min_matching(inst));
        }
        for (unsigned long long seed = 0; seed < 6; ++seed) {
            Instance inst = testutil::euclidean_instance(n, 8765 * n + seed);
            auto mate = min_weight_perfect_matching(inst.n, [&](int a, int b) { return inst.d[a][b]; });
            CHECK(matching_weight(inst, mate) == testutil::dp_min_matching(inst));
        }
    }
}
