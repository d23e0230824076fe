// ════════════════════════════════════════════════════════════════════════
// Exact minor oracle for small hosts.  Complete recursion
//     H minor of G  <=>  H spanning-iso to G (when |V| match)
//                        or H minor of G - v   for some vertex v
//                        or H minor of G / e   for some edge e
// with memoization on the labeled host and prunes that make the K5 / K3,3
// cases fast: counting bounds, planarity early-false, extremal-density
// early-true, component splitting, and restricted branching at a vertex of
// degree below the minimum degree of H.
// ════════════════════════════════════════════════════════════════════════

#include "plandec/minors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>

#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"

namespace plandec {

namespace {

Graph k33_graph() {
    return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                 {2, 3}, {2, 4}, {2, 5}});
}

struct MinorContext {
    Graph h;
    int min_deg_h = 0;
    bool h_planar = false;
    bool h_connected = false;
    bool h_is_k5 = false;
    bool h_is_k33 = false;
    std::map<std::vector<std::uint64_t>, bool> memo;
};

/// Labeled bitset encoding of g (vertex count + upper-triangle adjacency).
std::vector<std::uint64_t> encode(const Graph& g) {
    std::vector<std::uint64_t> key(1 + (static_cast<std::size_t>(g.n) * g.n / 2 + 63) / 64, 0);
    key[0] = static_cast<std::uint64_t>(g.n);
    for (const auto& [u, v] : g.edges) {
        // Rank of pair (u, v), u < v, in lexicographic order.
        std::size_t r = static_cast<std::size_t>(u) * (2 * g.n - u - 1) / 2 + (v - u - 1);
        key[1 + r / 64] |= std::uint64_t{1} << (r % 64);
    }
    return key;
}

/// Does some bijection map every edge of h onto an edge of g?  (|V| equal.)
bool spanning_subgraph_iso(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.m() < h.m()) return false;
    std::vector<int> deg_g = g.degrees(), deg_h = h.degrees();
    std::vector<int> order(static_cast<std::size_t>(h.n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return deg_h[a] > deg_h[b]; });
    std::vector<std::vector<char>> adj_g(static_cast<std::size_t>(g.n),
                                         std::vector<char>(static_cast<std::size_t>(g.n), 0));
    for (const auto& [u, v] : g.edges) adj_g[u][v] = adj_g[v][u] = 1;
    std::vector<std::vector<int>> adj_h(static_cast<std::size_t>(h.n));
    for (const auto& [u, v] : h.edges) {
        adj_h[u].push_back(v);
        adj_h[v].push_back(u);
    }
    std::vector<int> image(static_cast<std::size_t>(h.n), -1);
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    std::vector<int> rank(static_cast<std::size_t>(h.n), 0);
    for (int i = 0; i < h.n; ++i) rank[order[i]] = i;

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == h.n) return true;
        int x = order[depth];
        for (int cand = 0; cand < g.n; ++cand) {
            if (used[cand] || deg_g[cand] < deg_h[x]) continue;
            bool fits = true;
            for (int y : adj_h[x])
                if (rank[y] < depth && !adj_g[cand][image[y]]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            used[cand] = 1;
            image[x] = cand;
            if (self(self, depth + 1)) return true;
            used[cand] = 0;
            image[x] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

bool minor_rec(const Graph& g_in, MinorContext& ctx);

/// Branch on all deletions and contractions (plus the spanning check, done
/// by the caller); `restrict_to` limits the branching to one vertex when a
/// degree argument shows that vertex cannot be a singleton branch set.
bool branch(const Graph& g, MinorContext& ctx, int restrict_to) {
    std::vector<int> deg = g.degrees();
    // Contractions first, densest endpoints first: finds positives fast.
    std::vector<int> edge_order;
    for (int e = 0; e < g.m(); ++e) {
        const auto& [u, v] = g.edges[e];
        if (restrict_to >= 0 && u != restrict_to && v != restrict_to) continue;
        edge_order.push_back(e);
    }
    std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
        int da = deg[g.edges[a].first] + deg[g.edges[a].second];
        int db = deg[g.edges[b].first] + deg[g.edges[b].second];
        return da != db ? da > db : a < b;
    });
    for (int e : edge_order)
        if (minor_rec(g.contract_pairs({g.edges[e]}), ctx)) return true;
    if (restrict_to >= 0) {
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (v != restrict_to) keep.push_back(v);
        return minor_rec(g.induced(keep), ctx);
    }
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> keep;
        for (int w = 0; w < g.n; ++w)
            if (w != v) keep.push_back(w);
        if (minor_rec(g.induced(keep), ctx)) return true;
    }
    return false;
}

bool minor_rec(const Graph& g_in, MinorContext& ctx) {
    Graph g = g_in;
    // Isolated vertices are useless whenever h has none.
    if (ctx.min_deg_h >= 1) {
        std::vector<int> deg = g.degrees();
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (deg[v] > 0) keep.push_back(v);
        if (static_cast<int>(keep.size()) < g.n) g = g.induced(keep);
    }
    if (g.n < ctx.h.n || g.m() < ctx.h.m()) return false;
    if (ctx.h_is_k5 && g.m() >= 3 * g.n - 5) return true;
    if (ctx.h_is_k33 && g.m() >= 3 * g.n - 4) return true;
    if (!ctx.h_planar && is_planar(g)) return false;
    if (ctx.h_connected) {
        int count = 0;
        std::vector<int> comp = g.components(&count);
        if (count > 1) {
            for (int c = 0; c < count; ++c) {
                std::vector<int> keep;
                for (int v = 0; v < g.n; ++v)
                    if (comp[v] == c) keep.push_back(v);
                if (minor_rec(g.induced(keep), ctx)) return true;
            }
            return false;
        }
    }
    if (g.n == ctx.h.n) return spanning_subgraph_iso(g, ctx.h);

    std::vector<std::uint64_t> key = encode(g);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;

    std::vector<int> deg = g.degrees();
    int low = static_cast<int>(std::min_element(deg.begin(), deg.end()) - deg.begin());
    int restrict_to = deg[low] < ctx.min_deg_h ? low : -1;
    bool result = branch(g, ctx, restrict_to);
    ctx.memo.emplace(std::move(key), result);
    return result;
}

} // namespace

int minor_oracle_cap() {
    if (const char* env = std::getenv("PLANDEC_ORACLE_CAP"))
        if (int v = std::atoi(env); v > 0) return v;
    return 25;
}

bool has_minor_small(const Graph& g, const Graph& h) {
    check_precondition(g.n <= minor_oracle_cap(),
                       "graph exceeds the exact minor oracle size cap");
    check_precondition(h.n >= 1, "minor pattern must be nonempty");
    MinorContext ctx;
    ctx.h = h;
    std::vector<int> deg_h = ctx.h.degrees();
    ctx.min_deg_h = deg_h.empty() ? 0 : *std::min_element(deg_h.begin(), deg_h.end());
    ctx.h_planar = is_planar(ctx.h);
    int count = 0;
    ctx.h.components(&count);
    ctx.h_connected = count <= 1;
    ctx.h_is_k5 = ctx.h == complete_graph(5);
    ctx.h_is_k33 = ctx.h == k33_graph();
    return minor_rec(g, ctx);
}

bool has_k5_minor_small(const Graph& g) { return has_minor_small(g, complete_graph(5)); }

bool has_k33_minor_small(const Graph& g) { return has_minor_small(g, k33_graph()); }

} // namespace plandec
