// ════════════════════════════════════════════════════════════════════════
// Exact treewidth oracle: dynamic programming over vertex subsets,
//     f(S) = min over v in S of max(f(S - v), q(S - v, v)),
// where q(S', v) counts the vertices outside S' + v reachable from v through
// S'.  f(V) is the treewidth; backpointers yield an elimination order whose
// fill cliques give an optimal tree decomposition.
// ════════════════════════════════════════════════════════════════════════

#include "plandec/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>

#include "plandec/errors.hpp"

namespace plandec {

namespace {

/// Vertices outside s and v reachable from v via paths internal to s,
/// as a bitmask (adj is the bitmask adjacency table).
std::uint32_t outside_reach(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
    std::uint32_t region = std::uint32_t{1} << v;
    std::uint32_t frontier = region;
    std::uint32_t seen_neighbors = 0;
    while (frontier != 0) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f != 0) {
            int w = __builtin_ctz(f);
            f &= f - 1;
            seen_neighbors |= adj[w];
            next |= adj[w] & s & ~region;
        }
        region |= next;
        frontier = next;
    }
    return seen_neighbors & ~s & ~(std::uint32_t{1} << v);
}

} // namespace

int TreeDecomp::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

bool is_valid_tree_decomposition(const Graph& g, const TreeDecomp& td, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    const int b = static_cast<int>(td.bags.size());
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= g.n) return fail("bag entry out of range");
    if (b == 0) return g.n == 0 ? true : fail("no bags but graph has vertices");
    if (static_cast<int>(td.edges.size()) != b - 1) return fail("edge count is not bags-1");
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
    for (const auto& [x, y] : td.edges) {
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) return fail("tree edge out of range");
        tree[x].push_back(y);
        tree[y].push_back(x);
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(b), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : tree[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    q.push(y);
                }
        }
        if (reached != b) return fail("tree edges do not connect the bags");
    }
    std::vector<std::vector<int>> holding(static_cast<std::size_t>(g.n));
    for (int i = 0; i < b; ++i)
        for (int v : td.bags[i]) holding[v].push_back(i);
    for (int v = 0; v < g.n; ++v) {
        if (holding[v].empty()) return fail("vertex missing from all bags");
        std::vector<char> in(static_cast<std::size_t>(b), 0);
        for (int i : holding[v]) in[i] = 1;
        std::queue<int> q;
        q.push(holding[v][0]);
        std::vector<char> seen(static_cast<std::size_t>(b), 0);
        seen[holding[v][0]] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : tree[x])
                if (in[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    q.push(y);
                }
        }
        if (reached != holding[v].size()) return fail("bags holding a vertex are disconnected");
    }
    for (const auto& [u, v] : g.edges) {
        bool covered = false;
        for (int i : holding[u])
            if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) {
                covered = true;
                break;
            }
        if (!covered) return fail("edge not inside any bag");
    }
    return true;
}

int treewidth_oracle_cap() {
    if (const char* env = std::getenv("PLANDEC_ORACLE_CAP"))
        if (int v = std::atoi(env); v > 0) return v;
    return 18;
}

int treewidth_exact_small(const Graph& g, TreeDecomp* td) {
    check_precondition(g.n <= treewidth_oracle_cap(),
                       "graph exceeds the exact treewidth oracle size cap");
    if (g.n == 0) {
        if (td != nullptr) *td = TreeDecomp{};
        return -1;
    }

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }

    const std::uint32_t full = g.n == 32 ? ~std::uint32_t{0}
                                         : (std::uint32_t{1} << g.n) - 1;
    std::vector<std::int8_t> f(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 127, best_v = -1;
        std::uint32_t iter = s;
        while (iter != 0) {
            int v = __builtin_ctz(iter);
            iter &= iter - 1;
            std::uint32_t rest = s & ~(std::uint32_t{1} << v);
            int cost = std::max<int>(f[rest],
                                     __builtin_popcount(outside_reach(adj, rest, v)));
            if (cost < best) {
                best = cost;
                best_v = v;
            }
        }
        f[s] = static_cast<std::int8_t>(best);
        choice[s] = static_cast<std::int8_t>(best_v);
    }
    const int width = f[full];

    if (td != nullptr) {
        // Backpointers list vertices from last-eliminated to first.
        std::vector<int> elim(static_cast<std::size_t>(g.n));
        std::uint32_t s = full;
        for (int i = g.n - 1; i >= 0; --i) {
            int v = choice[s];
            elim[i] = v;
            s &= ~(std::uint32_t{1} << v);
        }
        std::vector<int> pos(static_cast<std::size_t>(g.n));
        for (int i = 0; i < g.n; ++i) pos[elim[i]] = i;

        // Bag of v: v plus its reach through earlier-eliminated vertices
        // (the fill clique); parent: the earliest-eliminated bag member.
        td->bags.assign(static_cast<std::size_t>(g.n), {});
        td->edges.clear();
        std::uint32_t earlier = 0;
        std::vector<int> roots;
        for (int i = 0; i < g.n; ++i) {
            int v = elim[i];
            std::uint32_t high = outside_reach(adj, earlier, v);
            std::vector<int>& bag = td->bags[v];
            bag.push_back(v);
            int parent = -1, parent_pos = g.n;
            std::uint32_t it2 = high;
            while (it2 != 0) {
                int w = __builtin_ctz(it2);
                it2 &= it2 - 1;
                bag.push_back(w);
                if (pos[w] < parent_pos) {
                    parent_pos = pos[w];
                    parent = w;
                }
            }
            std::sort(bag.begin(), bag.end());
            if (parent >= 0)
                td->edges.emplace_back(v, parent);
            else
                roots.push_back(v);
            earlier |= std::uint32_t{1} << v;
        }
        for (std::size_t i = 1; i < roots.size(); ++i)
            td->edges.emplace_back(roots[i - 1], roots[i]);

        std::string why;
        check_invariant(is_valid_tree_decomposition(g, *td, &why),
                        "reconstructed tree decomposition invalid: " + why);
        check_invariant(td->width() == width,
                        "reconstructed tree decomposition misses the optimum");
    }
    return width;
}

} // namespace plandec
