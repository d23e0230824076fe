#include "plandec/graph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

#include "plandec/errors.hpp"

namespace plandec {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> raw,
                        bool allow_duplicates) {
    Graph g(n);
    check_precondition(n >= 0, "vertex count must be non-negative");
    for (auto& [u, v] : raw) {
        check_precondition(u >= 0 && u < n && v >= 0 && v < n,
                           "edge endpoint out of range");
        check_precondition(u != v, "self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(raw.begin(), raw.end());
    if (allow_duplicates) {
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    } else {
        check_precondition(std::adjacent_find(raw.begin(), raw.end()) == raw.end(),
                           "parallel edges are not allowed");
    }
    g.edges = std::move(raw);
    return g;
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

int Graph::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<int> Graph::components(int* count) const {
    std::vector<int> comp(n, -1);
    auto adj = adjacency();
    int c = 0;
    for (int s = 0; s < n; s++) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        c++;
    }
    if (count) *count = c;
    return comp;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    int c = 0;
    components(&c);
    return c == 1;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> newid(n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); i++) {
        check_precondition(verts[i] >= 0 && verts[i] < n && newid[verts[i]] < 0,
                           "induced: bad vertex list");
        newid[verts[i]] = i;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges)
        if (newid[u] >= 0 && newid[v] >= 0)
            es.push_back({newid[u], newid[v]});
    return from_edges(static_cast<int>(verts.size()), std::move(es), true);
}

Graph Graph::contract_pairs(const std::vector<std::pair<int, int>>& pairs) const {
    // Union-find over the pairs.
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (auto [a, b] : pairs) {
        check_precondition(a >= 0 && a < n && b >= 0 && b < n,
                           "contract_pairs: vertex out of range");
        int ra = find(a), rb = find(b);
        if (ra != rb) rep[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int v = 0; v < n; v++)
        if (find(v) == v) newid[v] = next++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges) {
        int a = newid[find(u)], b = newid[find(v)];
        if (a != b) es.push_back({a, b});
    }
    return from_edges(next, std::move(es), true);
}

// ---- edge-list text ---------------------------------------------------------

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list: expected header 'n m'");
    if (n < 0 || m < 0) throw parse_error("edge list: negative counts");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; i++) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw parse_error("edge list: truncated edge lines");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range");
        if (u == v) throw parse_error("edge list: self-loop");
        es.push_back({u, v});
    }
    try {
        return Graph::from_edges(n, std::move(es), false);
    } catch (const precondition_error& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open graph file: " + path);
    return read_edge_list(f);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- degeneracy ---------------------------------------------------------------

DegeneracyOrder degeneracy_order(const Graph& g) {
    DegeneracyOrder out;
    out.removal.reserve(g.n);
    out.pos.assign(g.n, -1);
    auto adj = g.adjacency();
    std::vector<int> deg = g.degrees();
    std::vector<char> removed(g.n, 0);
    // Bucketed min-degree extraction with smallest-id tie break.
    for (int step = 0; step < g.n; step++) {
        int best = -1;
        for (int v = 0; v < g.n; v++)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        out.pos[best] = step;
        out.removal.push_back(best);
        out.d = std::max(out.d, deg[best]);
        for (int w : adj[best])
            if (!removed[w]) deg[w]--;
    }
    return out;
}

std::vector<std::vector<int>> degeneracy_in_neighbors(const Graph& g,
                                                      const DegeneracyOrder& ord) {
    std::vector<std::vector<int>> in(g.n);
    for (auto [u, v] : g.edges) {
        // Arc from the later-removed endpoint to the earlier-removed one.
        if (ord.pos[u] > ord.pos[v])
            in[v].push_back(u);
        else
            in[u].push_back(v);
    }
    for (auto& a : in) std::sort(a.begin(), a.end());
    return in;
}

// ---- cliques ----------------------------------------------------------------

namespace {

void extend_clique(const std::vector<std::vector<int>>& adj, int p,
                   std::vector<int>& cur, const std::vector<int>& cands,
                   std::vector<std::vector<int>>& out) {
    for (int i = 0; i < static_cast<int>(cands.size()); i++) {
        int v = cands[i];
        cur.push_back(v);
        out.push_back(cur);
        if (static_cast<int>(cur.size()) < p) {
            std::vector<int> next;
            for (int j = i + 1; j < static_cast<int>(cands.size()); j++) {
                int w = cands[j];
                if (std::binary_search(adj[v].begin(), adj[v].end(), w))
                    next.push_back(w);
            }
            extend_clique(adj, p, cur, next, out);
        }
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int p) {
    check_precondition(p >= 1, "enumerate_cliques: p must be >= 1");
    auto adj = g.adjacency();
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend_clique(adj, p, cur, all, out);
    // Already generated in lexicographic order by construction.
    return out;
}

int clique_number(const Graph& g) {
    if (g.n == 0) return 0;
    auto ord = degeneracy_order(g);
    auto in = degeneracy_in_neighbors(g, ord);
    auto adj = g.adjacency();
    int best = 1;
    // Every clique lies inside {v} + in-neighbors of its earliest-removed
    // member, so a search over these closed sets (size <= d+1) is exhaustive.
    std::vector<int> cur;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cands) {
        best = std::max(best, static_cast<int>(cur.size()));
        for (int i = 0; i < static_cast<int>(cands.size()); i++) {
            if (static_cast<int>(cur.size() + cands.size() - i) <= best) break;
            int v = cands[i];
            std::vector<int> next;
            for (int j = i + 1; j < static_cast<int>(cands.size()); j++)
                if (std::binary_search(adj[v].begin(), adj[v].end(), cands[j]))
                    next.push_back(cands[j]);
            cur.push_back(v);
            grow(next);
            cur.pop_back();
        }
    };
    for (int v = 0; v < g.n; v++) {
        cur = {v};
        grow(in[v]);
    }
    return best;
}

// ---- V8 ---------------------------------------------------------------------

Graph v8_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 8; i++) es.push_back({i, (i + 1) % 8});
    for (int i = 0; i < 4; i++) es.push_back({i, i + 4});
    return Graph::from_edges(8, std::move(es));
}

bool is_v8(const Graph& g, std::vector<int>* map_out) {
    if (g.n != 8 || g.m() != 12) return false;
    auto deg = g.degrees();
    for (int v = 0; v < 8; v++)
        if (deg[v] != 3) return false;
    // Anchor vertex 0 at every cycle position is unnecessary: fix role 0 := 0,
    // try each neighbor as role 1, and follow forced choices with backtracking
    // over the tiny remaining freedom.
    Graph target = v8_graph();
    std::array<int, 8> perm;
    std::vector<char> used(8, 0);
    auto adj = g.adjacency();
    std::function<bool(int)> place = [&](int role) -> bool {
        if (role == 8) {
            for (auto [a, b] : target.edges)
                if (!g.has_edge(perm[a], perm[b])) return false;
            return true;
        }
        for (int v = 0; v < 8; v++) {
            if (used[v]) continue;
            bool ok = true;
            for (auto [a, b] : target.edges) {
                if (a < role && b == role && !g.has_edge(perm[a], v)) ok = false;
                if (b < role && a == role && !g.has_edge(perm[b], v)) ok = false;
            }
            if (!ok) continue;
            perm[role] = v;
            used[v] = 1;
            if (place(role + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    (void)adj;
    if (!place(0)) return false;
    if (map_out) map_out->assign(perm.begin(), perm.end());
    return true;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) es.push_back({u, v});
    return Graph::from_edges(n, std::move(es));
}

} // namespace plandec
