#include "plandec/decomposition.hpp"

#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace plandec {

Decomposition Decomposition::make(Graph host, std::vector<std::vector<int>> bags,
                                  bool strong, int p)
{
    check_precondition(host.n == static_cast<int>(bags.size()),
                       "decomposition: one bag per host vertex required");
    check_precondition(p >= 2, "decomposition: p >= 2 required");
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    Decomposition d;
    d.host = std::move(host);
    d.bags = std::move(bags);
    d.strong = strong;
    d.p = p;
    return d;
}

int Decomposition::width() const
{
    std::size_t w = 0;
    for (const auto& bag : bags) w = std::max(w, bag.size());
    return static_cast<int>(w);
}

int Decomposition::spread(int v) const
{
    int s = 0;
    for (const auto& bag : bags)
        if (std::binary_search(bag.begin(), bag.end(), v)) ++s;
    return s;
}

int Decomposition::spread() const
{
    int vmax = -1;
    for (const auto& bag : bags)
        if (!bag.empty()) vmax = std::max(vmax, bag.back());
    int s = 0;
    for (int v = 0; v <= vmax; ++v) s = std::max(s, spread(v));
    return s;
}

long long decomposition_edge_capacity(const Decomposition& d)
{
    long long k = d.width();
    long long per_bag = k * (k - 1) / 2;
    if (d.strong) return per_bag * d.order();
    return k * k * d.host.m() + per_bag * d.order();
}

namespace {

// Bags containing v, as host vertex ids.
std::vector<int> bags_of(const Decomposition& d, int v)
{
    std::vector<int> out;
    for (int b = 0; b < d.order(); ++b)
        if (std::binary_search(d.bags[b].begin(), d.bags[b].end(), v)) out.push_back(b);
    return out;
}

bool connected_in_host(const Graph& host, const std::vector<int>& verts)
{
    if (verts.empty()) return false;
    std::set<int> inside(verts.begin(), verts.end());
    auto adj = host.adjacency();
    std::set<int> seen{verts[0]};
    std::queue<int> q;
    q.push(verts[0]);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (inside.count(y) && !seen.count(y)) {
                seen.insert(y);
                q.push(y);
            }
    }
    return seen.size() == inside.size();
}

}  // namespace

std::vector<std::string> validate_decomposition(const Graph& g, const Decomposition& d,
                                                bool require_planar)
{
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) {
        if (bad.size() < 100) bad.push_back(s);
    };

    if (d.host.n != d.order()) {
        fail("host order does not match bag count");
        return bad;
    }
    if (d.p < 2) fail("claimed p must be at least 2");
    for (int b = 0; b < d.order(); ++b) {
        const auto& bag = d.bags[b];
        if (bag.empty()) fail("bag " + std::to_string(b) + " is empty");
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            fail("bag " + std::to_string(b) + " is not sorted/distinct");
        for (int v : bag)
            if (v < 0 || v >= g.n)
                fail("bag " + std::to_string(b) + " contains out-of-range vertex " +
                     std::to_string(v));
    }
    if (!bad.empty()) return bad;

    std::vector<std::vector<int>> home(g.n);
    for (int v = 0; v < g.n; ++v) home[v] = bags_of(d, v);

    for (int v = 0; v < g.n; ++v) {
        if (home[v].empty()) {
            fail("vertex " + std::to_string(v) + " appears in no bag");
            continue;
        }
        if (!connected_in_host(d.host, home[v]))
            fail("bags of vertex " + std::to_string(v) + " are not connected in the host");
    }

    // Touch / intersection per edge.
    for (auto [v, w] : g.edges) {
        bool share = false;
        for (int b : home[v])
            if (std::binary_search(d.bags[b].begin(), d.bags[b].end(), w)) share = true;
        if (d.strong) {
            if (!share)
                fail("strong claim: no bag contains both endpoints of edge " +
                     std::to_string(v) + "-" + std::to_string(w));
            continue;
        }
        bool touch = share;
        if (!touch) {
            std::set<int> hv(home[v].begin(), home[v].end());
            std::set<int> hw(home[w].begin(), home[w].end());
            for (auto [x, y] : d.host.edges) {
                if ((hv.count(x) && hw.count(y)) || (hv.count(y) && hw.count(x))) {
                    touch = true;
                    break;
                }
            }
        }
        if (!touch)
            fail("subgraphs of edge " + std::to_string(v) + "-" + std::to_string(w) +
                 " do not touch");
    }

    // Clique coverage for sizes 3..p (sizes 1 and 2 are covered by the vertex
    // and edge conditions above when not strong; for strong claims size 2 was
    // just checked).
    if (d.p >= 3) {
        for (const auto& clique : enumerate_cliques(g, d.p)) {
            if (clique.size() < 3) continue;
            bool in_one = false;
            for (const auto& bag : d.bags)
                if (std::includes(bag.begin(), bag.end(), clique.begin(), clique.end()))
                    in_one = true;
            bool covered = in_one;
            if (!covered && !d.strong) {
                for (auto [x, y] : d.host.edges) {
                    std::vector<int> uni;
                    std::set_union(d.bags[x].begin(), d.bags[x].end(), d.bags[y].begin(),
                                   d.bags[y].end(), std::back_inserter(uni));
                    if (std::includes(uni.begin(), uni.end(), clique.begin(), clique.end())) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) {
                std::ostringstream os;
                os << (d.strong ? "strong " : "") << d.p << "-clique-coverage fails for {";
                for (std::size_t i = 0; i < clique.size(); ++i)
                    os << (i ? "," : "") << clique[i];
                os << "}";
                fail(os.str());
            }
        }
    }

    if (require_planar && !is_planar(d.host)) fail("host graph is not planar");

    if (g.m() > decomposition_edge_capacity(d))
        fail("edge count exceeds decomposition capacity");

    return bad;
}

Decomposition identity_decomposition(const Graph& g)
{
    std::vector<std::vector<int>> bags(g.n);
    for (int v = 0; v < g.n; ++v) bags[v] = {v};
    return Decomposition::make(g, std::move(bags), false, 2);
}

Decomposition quadratic_decomposition(const Graph& g)
{
    const int n = g.n;
    check_precondition(n >= 1, "quadratic decomposition needs at least one vertex");
    auto bag_id = [n](int i, int j) {  // 0-based, i <= j
        return i * n - i * (i - 1) / 2 + (j - i);
    };
    std::vector<std::vector<int>> bags(n * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            bags[bag_id(i, j)] = (i == j) ? std::vector<int>{i} : std::vector<int>{i, j};

    std::vector<std::pair<int, int>> host_edges;
    for (int a = 0; a + 1 < n; ++a)
        for (int b = 0; b < n; ++b) {
            int u = bag_id(std::min(a, b), std::max(a, b));
            int v = bag_id(std::min(a + 1, b), std::max(a + 1, b));
            host_edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    Graph host = Graph::from_edges(static_cast<int>(bags.size()), std::move(host_edges),
                                   /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(bags), /*strong=*/true, 2);
}

}  // namespace plandec
