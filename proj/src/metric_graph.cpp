#include "ttp/metric_graph.hpp"

#include <algorithm>
#include <numeric>

#include "ttp/matching.hpp"

namespace ttp {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

SpanningTree min_spanning_tree(const Instance& inst) {
    struct Edge {
        Weight w;
        int u, v;
    };
    std::vector<Edge> edges;
    edges.reserve(inst.n * (inst.n - 1) / 2);
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v) edges.push_back({inst.d[u][v], u, v});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    SpanningTree tree;
    Dsu dsu(inst.n);
    for (const Edge& e : edges) {
        if (dsu.unite(e.u, e.v)) {
            tree.edges.emplace_back(e.u, e.v);
            tree.weight += e.w;
            if (static_cast<int>(tree.edges.size()) == inst.n - 1) break;
        }
    }
    return tree;
}

Matching min_perfect_matching(const Instance& inst) {
    auto mate = min_weight_perfect_matching(inst.n, [&](int a, int b) { return inst.d[a][b]; });
    Matching m;
    m.mate = mate;
    for (int i = 0; i < inst.n; ++i)
        if (i < mate[i]) {
            m.pairs.emplace_back(i, mate[i]);
            m.weight += inst.d[i][mate[i]];
        }
    return m;
}

Weight cycle_length(const Instance& inst, const std::vector<int>& order) {
    Weight len = 0;
    for (size_t i = 0; i < order.size(); ++i) len += inst.d[order[i]][order[(i + 1) % order.size()]];
    return len;
}

HamiltonCycle christofides_cycle(const Instance& inst, const SpanningTree& tree) {
    int n = inst.n;
    std::vector<int> deg(n, 0);
    for (auto [u, v] : tree.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (deg[v] % 2 == 1) odd.push_back(v);

    std::vector<std::pair<int, int>> matched;
    if (!odd.empty()) {
        auto mate = min_weight_perfect_matching(
            static_cast<int>(odd.size()), [&](int a, int b) { return inst.d[odd[a]][odd[b]]; });
        for (size_t i = 0; i < odd.size(); ++i)
            if (static_cast<int>(i) < mate[i]) matched.emplace_back(odd[i], odd[mate[i]]);
    }

    // Eulerian circuit over tree + matching edges (Hierholzer), neighbors in
    // ascending order for determinism.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    int edge_id = 0;
    auto add_edge = [&](int u, int v) {
        adj[u].emplace_back(v, edge_id);
        adj[v].emplace_back(u, edge_id);
        ++edge_id;
    };
    for (auto [u, v] : tree.edges) add_edge(u, v);
    for (auto [u, v] : matched) add_edge(u, v);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<bool> used(edge_id, false);
    std::vector<size_t> it(n, 0);
    std::vector<int> stack{0}, euler;
    while (!stack.empty()) {
        int u = stack.back();
        while (it[u] < adj[u].size() && used[adj[u][it[u]].second]) ++it[u];
        if (it[u] == adj[u].size()) {
            euler.push_back(u);
            stack.pop_back();
        } else {
            auto [v, id] = adj[u][it[u]];
            used[id] = true;
            stack.push_back(v);
        }
    }

    HamiltonCycle cycle;
    std::vector<bool> seen(n, false);
    for (int v : euler)
        if (!seen[v]) {
            seen[v] = true;
            cycle.order.push_back(v);
        }
    cycle.length = cycle_length(inst, cycle.order);
    return cycle;
}

}  // namespace ttp
