#include "ttp/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ttp {

namespace {

// Primal-dual blossom algorithm for maximum weight matching on a dense
// graph, O(n^3)-flavored. 1-based vertices; pseudo-nodes occupy n+1..2n.
// g[x][y] keeps a representative edge (with its real endpoints) between the
// surface nodes x and y. Weights must be strictly positive so that w == 0
// can mark an absent representative; the caller arranges that.
struct Blossom {
    struct E {
        int u = 0, v = 0;
        Weight w = 0;
    };

    int n, n_x;
    std::vector<std::vector<E>> g;
    std::vector<Weight> lab;
    std::vector<int> match, slackv, st, pa, S, vis;
    std::vector<std::vector<int>> flower;
    std::vector<std::vector<int>> flower_from;
    std::queue<int> q;

    explicit Blossom(int n_)
        : n(n_),
          n_x(n_),
          g(2 * n_ + 1, std::vector<E>(2 * n_ + 1)),
          lab(2 * n_ + 1, 0),
          match(2 * n_ + 1, 0),
          slackv(2 * n_ + 1, 0),
          st(2 * n_ + 1, 0),
          pa(2 * n_ + 1, 0),
          S(2 * n_ + 1, -1),
          vis(2 * n_ + 1, 0),
          flower(2 * n_ + 1),
          flower_from(2 * n_ + 1, std::vector<int>(n_ + 1, 0)) {
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) g[u][v] = E{u, v, 0};
    }

    Weight e_delta(const E& e) const { return lab[e.u] + lab[e.v] - 2 * e.w; }

    void update_slack(int u, int x) {
        if (!slackv[x] || e_delta(g[u][x]) < e_delta(g[slackv[x]][x])) slackv[x] = u;
    }

    void set_slack(int x) {
        slackv[x] = 0;
        for (int u = 1; u <= n; ++u)
            if (g[u][x].w > 0 && st[u] != x && S[st[u]] == 0) update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n) {
            q.push(x);
        } else {
            for (int i : flower[x]) q_push(i);
        }
    }

    void set_st(int x, int b) {
        st[x] = b;
        if (x > n)
            for (int i : flower[x]) set_st(i, b);
    }

    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower[b].begin(), flower[b].end(), xr) - flower[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower[b].begin() + 1, flower[b].end());
            return static_cast<int>(flower[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match[u] = g[u][v].v;
        if (u <= n) return;
        E e = g[u][v];
        int xr = flower_from[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower[u][i], flower[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st[match[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st[pa[xnv]]);
            u = st[pa[xnv]];
            v = xnv;
        }
    }

    int lca_stamp = 0;

    int get_lca(int u, int v) {
        int t = ++lca_stamp;
        for (; u || v; std::swap(u, v)) {
            if (!u) continue;
            if (vis[u] == t) return u;
            vis[u] = t;
            u = st[match[u]];
            if (u) u = st[pa[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n + 1;
        while (b <= n_x && st[b]) ++b;
        if (b > n_x) ++n_x;
        lab[b] = 0;
        S[b] = 0;
        match[b] = match[lca];
        flower[b].clear();
        flower[b].push_back(lca);
        for (int x = u, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[match[x]]);
            q_push(y);
        }
        std::reverse(flower[b].begin() + 1, flower[b].end());
        for (int x = v, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[match[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x; ++x) g[b][x].w = g[x][b].w = 0;
        for (int x = 1; x <= n; ++x) flower_from[b][x] = 0;
        for (int xs : flower[b]) {
            for (int x = 1; x <= n_x; ++x)
                if (g[xs][x].w > 0 && (g[b][x].w == 0 || e_delta(g[xs][x]) < e_delta(g[b][x]))) {
                    g[b][x] = g[xs][x];
                    g[x][b] = g[x][xs];
                }
            for (int x = 1; x <= n; ++x)
                if (xs <= n) {
                    if (xs == x) flower_from[b][x] = xs;
                } else if (flower_from[xs][x]) {
                    flower_from[b][x] = xs;
                }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int i : flower[b]) set_st(i, i);
        int xr = flower_from[b][g[b][pa[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower[b][i];
            int xns = flower[b][i + 1];
            pa[xs] = g[xns][xs].u;
            S[xs] = 1;
            S[xns] = 0;
            slackv[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        S[xr] = 1;
        pa[xr] = pa[b];
        for (size_t i = pr + 1; i < flower[b].size(); ++i) {
            int xs = flower[b][i];
            S[xs] = -1;
            set_slack(xs);
        }
        st[b] = 0;
    }

    bool on_found_edge(const E& e) {
        int u = st[e.u], v = st[e.v];
        if (S[v] == -1) {
            pa[v] = e.u;
            S[v] = 1;
            int nu = st[match[v]];
            slackv[v] = slackv[nu] = 0;
            S[nu] = 0;
            q_push(nu);
        } else if (S[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching_phase() {
        for (int x = 1; x <= n_x; ++x) {
            S[x] = -1;
            slackv[x] = 0;
        }
        q = std::queue<int>();
        for (int x = 1; x <= n_x; ++x)
            if (st[x] == x && !match[x]) {
                pa[x] = 0;
                S[x] = 0;
                q_push(x);
            }
        if (q.empty()) return false;
        for (;;) {
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                if (S[st[u]] == 1) continue;
                for (int v = 1; v <= n; ++v)
                    if (g[u][v].w > 0 && st[u] != st[v]) {
                        if (e_delta(g[u][v]) == 0) {
                            if (on_found_edge(g[u][v])) return true;
                        } else {
                            update_slack(u, st[v]);
                        }
                    }
            }
            Weight d = std::numeric_limits<Weight>::max();
            for (int b = n + 1; b <= n_x; ++b)
                if (st[b] == b && S[b] == 1) d = std::min(d, lab[b] / 2);
            for (int x = 1; x <= n_x; ++x)
                if (st[x] == x && slackv[x]) {
                    if (S[x] == -1)
                        d = std::min(d, e_delta(g[slackv[x]][x]));
                    else if (S[x] == 0)
                        d = std::min(d, e_delta(g[slackv[x]][x]) / 2);
                }
            for (int u = 1; u <= n; ++u) {
                if (S[st[u]] == 0) {
                    if (lab[u] <= d) return false;
                    lab[u] -= d;
                } else if (S[st[u]] == 1) {
                    lab[u] += d;
                }
            }
            for (int b = n + 1; b <= n_x; ++b)
                if (st[b] == b && S[b] >= 0) {
                    if (S[b] == 0)
                        lab[b] += 2 * d;
                    else
                        lab[b] -= 2 * d;
                }
            q = std::queue<int>();
            for (int x = 1; x <= n_x; ++x)
                if (st[x] == x && slackv[x] && st[slackv[x]] != x && e_delta(g[slackv[x]][x]) == 0)
                    if (on_found_edge(g[slackv[x]][x])) return true;
            for (int b = n + 1; b <= n_x; ++b)
                if (st[b] == b && S[b] == 1 && lab[b] == 0) expand_blossom(b);
        }
    }

    void run() {
        for (int u = 0; u <= n; ++u) st[u] = u;
        Weight w_max = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) w_max = std::max(w_max, g[u][v].w);
        for (int u = 1; u <= n; ++u) lab[u] = w_max;
        while (matching_phase()) {
        }
    }
};

}  // namespace

std::vector<int> min_weight_perfect_matching(int n, const std::function<Weight(int, int)>& w) {
    if (n % 2 != 0) throw ConstructionError("perfect matching needs an even vertex count");
    std::vector<int> mate(n, -1);
    if (n == 0) return mate;
    if (n == 2) {
        mate[0] = 1;
        mate[1] = 0;
        return mate;
    }

    // Flip to a maximization problem with strictly positive weights; a
    // maximum weight matching is then forced to be perfect.
    Weight w_max = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) w_max = std::max(w_max, w(i, j));
    Weight big = w_max + 1;

    Blossom bl(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) bl.g[i + 1][j + 1].w = big - w(i, j);
    bl.run();

    for (int i = 0; i < n; ++i) {
        int m = bl.match[i + 1];
        if (m < 1 || m > n || m == i + 1) throw ConstructionError("matching is not perfect");
        mate[i] = m - 1;
    }
    for (int i = 0; i < n; ++i)
        if (mate[mate[i]] != i) throw ConstructionError("matching is not an involution");
    return mate;
}

}  // namespace ttp
