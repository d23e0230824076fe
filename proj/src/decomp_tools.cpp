#include "plandec/decomp_tools.hpp"

#include "plandec/errors.hpp"
#include "plandec/matching.hpp"
#include "plandec/planarity.hpp"

#include <algorithm>
#include <set>

namespace plandec {

namespace {

// Merge each pair's second bag into its first and re-densify host ids.
Decomposition contract_pairs_impl(const Decomposition& d,
                                  const std::vector<std::pair<int, int>>& pairs)
{
    const int n = d.host.n;
    std::vector<int> target(n);
    for (int i = 0; i < n; ++i) target[i] = i;
    std::set<int> used;
    for (auto [a, b] : pairs) {
        check_precondition(a >= 0 && a < n && b >= 0 && b < n && a != b,
                           "contract: bad host vertex pair");
        check_precondition(d.host.has_edge(a, b), "contract: pair is not a host edge");
        check_precondition(!used.count(a) && !used.count(b),
                           "contract: pairs must be disjoint");
        used.insert(a);
        used.insert(b);
        target[b] = a;
    }
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
        if (target[i] == i) newid[i] = next++;
    std::vector<std::vector<int>> bags(next);
    for (int i = 0; i < n; ++i) {
        auto& bag = bags[newid[target[i]]];
        bag.insert(bag.end(), d.bags[i].begin(), d.bags[i].end());
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.host.edges) {
        int a = newid[target[u]], b = newid[target[v]];
        if (a == b) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    Graph host = Graph::from_edges(next, std::move(edges), /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(bags), d.strong, d.p);
}

}  // namespace

Decomposition contract_decomp_edge(const Decomposition& d, int a, int b)
{
    return contract_pairs_impl(d, {{a, b}});
}

Decomposition contract_decomp_matching(const Decomposition& d,
                                       const std::vector<std::pair<int, int>>& m)
{
    return contract_pairs_impl(d, m);
}

Decomposition reduce_order(Decomposition d, int target, int* rounds_out)
{
    target = std::max(target, 1);
    int rounds = 0;
    while (d.order() > target) {
        if (d.order() == 2) {
            // Two bags cannot be triangulated; ensure an edge and merge.
            if (!d.host.has_edge(0, 1))
                d.host = Graph::from_edges(2, {{0, 1}});
            d = contract_decomp_edge(d, 0, 1);
            ++rounds;
            continue;
        }
        // Adding host edges never invalidates a decomposition, so replacing
        // the host by a planar triangulation of it is free.
        d.host = triangulate_planar(d.host);
        auto m = maximum_matching(d.host);
        check_invariant(!m.empty(), "triangulated host must have a matching");
        int want = std::min<int>(static_cast<int>(m.size()), d.order() - target);
        m.resize(want);
        d = contract_decomp_matching(d, m);
        ++rounds;
    }
    if (rounds_out) *rounds_out = rounds;
    return d;
}

Decomposition compose(const Decomposition& j, const Decomposition& d)
{
    check_precondition(static_cast<int>(j.bags.size()) == j.host.n,
                       "compose: outer decomposition malformed");
    std::vector<std::vector<int>> bags(j.order());
    for (int t = 0; t < j.order(); ++t) {
        for (int x : j.bags[t]) {
            check_precondition(x >= 0 && x < d.order(),
                               "compose: outer bags must index inner host vertices");
            bags[t].insert(bags[t].end(), d.bags[x].begin(), d.bags[x].end());
        }
    }
    return Decomposition::make(j.host, std::move(bags), d.strong, d.p);
}

Decomposition degen_omega(const Graph& g, int* degeneracy_out)
{
    check_precondition(g.n >= 1, "degen_omega: nonempty graph required");
    auto ord = degeneracy_order(g);
    auto inn = degeneracy_in_neighbors(g, ord);
    std::vector<std::vector<int>> bags(g.n);
    for (int v = 0; v < g.n; ++v) {
        bags[v] = inn[v];
        bags[v].push_back(v);
    }
    if (degeneracy_out) *degeneracy_out = ord.d;
    int omega = std::max(2, clique_number(g));
    Decomposition d = Decomposition::make(g, std::move(bags), /*strong=*/true, omega);
    check_invariant(d.width() <= ord.d + 1, "degen_omega: width exceeds degeneracy+1");
    return d;
}

Decomposition to_omega(const Graph& g, const Decomposition& d)
{
    int deg = 0;
    Decomposition inner = degen_omega(g, &deg);
    Decomposition out = compose(d, inner);
    check_invariant(out.width() <= d.width() * (deg + 1),
                    "to_omega: width exceeds product bound");
    return out;
}

namespace {

std::vector<std::vector<int>> relabel_bags(const std::vector<int>& to_g,
                                           const Decomposition& d)
{
    std::vector<std::vector<int>> out(d.order());
    for (int b = 0; b < d.order(); ++b)
        for (int v : d.bags[b]) {
            check_precondition(v >= 0 && v < static_cast<int>(to_g.size()),
                               "clique sum: bag vertex outside piece");
            out[b].push_back(to_g[v]);
        }
    return out;
}

// Smallest-id single bag covering `join`, or (-1,-1); else the
// lexicographically smallest adjacent host pair whose union covers it.
std::pair<int, int> find_cover(const Graph& host, const std::vector<std::vector<int>>& bags,
                               const std::vector<int>& join)
{
    for (int b = 0; b < static_cast<int>(bags.size()); ++b) {
        std::vector<int> sorted = bags[b];
        std::sort(sorted.begin(), sorted.end());
        if (std::includes(sorted.begin(), sorted.end(), join.begin(), join.end()))
            return {b, b};
    }
    for (auto [x, y] : host.edges) {
        std::vector<int> uni = bags[x];
        uni.insert(uni.end(), bags[y].begin(), bags[y].end());
        std::sort(uni.begin(), uni.end());
        if (std::includes(uni.begin(), uni.end(), join.begin(), join.end()))
            return {x, y};
    }
    return {-1, -1};
}

}  // namespace

Decomposition clique_sum_decomp(const std::vector<int>& to_g1, const Decomposition& d1,
                                const std::vector<int>& to_g2, const Decomposition& d2,
                                const std::vector<int>& join, SumCovers* covers)
{
    int p = std::min(d1.p, d2.p);
    check_precondition(static_cast<int>(join.size()) <= p,
                       "clique sum: join larger than the pieces' clique coverage");
    std::vector<int> join_sorted = join;
    std::sort(join_sorted.begin(), join_sorted.end());

    auto bags1 = relabel_bags(to_g1, d1);
    auto bags2 = relabel_bags(to_g2, d2);

    std::vector<std::pair<int, int>> edges = d1.host.edges;
    int off = d1.order();
    for (auto [u, v] : d2.host.edges) edges.emplace_back(u + off, v + off);

    SumCovers cov;
    if (!join_sorted.empty()) {
        auto [x1, y1] = find_cover(d1.host, bags1, join_sorted);
        auto [x2, y2] = find_cover(d2.host, bags2, join_sorted);
        check_precondition(x1 >= 0 && x2 >= 0,
                           "clique sum: a piece does not cover the join clique");
        if (d1.strong && d2.strong)
            check_invariant(x1 == y1 && x2 == y2,
                            "clique sum: strong pieces must cover the join in one bag");
        cov = {x1, y1, x2 + off, y2 + off};
        for (int a : {cov.x1, cov.y1})
            for (int b : {cov.x2, cov.y2})
                edges.emplace_back(a, b);
    }
    if (covers) *covers = cov;

    std::vector<std::vector<int>> bags = std::move(bags1);
    bags.insert(bags.end(), bags2.begin(), bags2.end());
    Graph host = Graph::from_edges(d1.order() + d2.order(), std::move(edges),
                                   /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(bags),
                               d1.strong && d2.strong, p);
}

}  // namespace plandec
