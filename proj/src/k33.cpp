#include "plandec/k33.hpp"

#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"
#include "plandec/sum_tree.hpp"

#include <algorithm>

namespace plandec {

namespace {

// Smallest piece of `t` containing `e` as a real edge.  Splits never drop
// edges, so a real edge appears in every piece holding both endpoints.
int piece_with_edge(const Graph& g, const SumTree& t, std::pair<int, int> e) {
    for (int p = 0; p < static_cast<int>(t.pieces.size()); ++p) {
        const SumPiece& piece = t.pieces[p];
        for (auto [lu, lv] : piece.graph.edges)
            if (std::minmax(piece.to_g[lu], piece.to_g[lv]) == std::minmax(e.first, e.second) &&
                g.has_edge(e.first, e.second))
                return p;
    }
    check_invariant(false, "the excluded edge appears in no piece");
    return -1;
}

// One matching edge inside a complete-graph piece: the smallest real edge
// (by input-vertex ids) whose endpoints are all unused.  Processing pieces
// from the piece holding the excluded edge outward keeps the number of
// unusable vertices per piece at the join size (<= 2), so three candidate
// vertices always remain; the pick can only fail if every edge among them
// was deleted by the surrounding sums.
void pick_piece_edge(const Graph& g, const SumPiece& piece, std::vector<char>& used,
                     std::vector<std::pair<int, int>>& m) {
    std::vector<std::pair<int, int>> candidates;
    for (auto [lu, lv] : piece.graph.edges) {
        int u = piece.to_g[lu], v = piece.to_g[lv];
        if (used[u] || used[v] || !g.has_edge(u, v)) continue;
        candidates.push_back(std::minmax(u, v));
    }
    check_invariant(!candidates.empty(),
                    "a complete-graph piece has no contractible edge left");
    auto [u, v] = *std::min_element(candidates.begin(), candidates.end());
    used[u] = used[v] = 1;
    m.push_back({u, v});
}

}  // namespace

std::vector<std::pair<int, int>> k33_planarizing_matching(const Graph& g,
                                                          std::pair<int, int> keep) {
    check_precondition(g.has_edge(keep.first, keep.second),
                       "the excluded edge must be an edge of the graph");
    SumTree t = wagner_k33_decompose(g);
    check_precondition(!t.has_failure(), "input graph has a K3,3 minor");

    std::vector<char> used(g.n, 0);
    used[keep.first] = used[keep.second] = 1;
    std::vector<std::pair<int, int>> m;

    int root = piece_with_edge(g, t, keep);
    if (t.pieces[root].kind == PieceKind::k5) pick_piece_edge(g, t.pieces[root], used, m);
    for (auto [j, fresh] : sum_tree_walk(t, root)) {
        (void)j;
        if (t.pieces[fresh].kind == PieceKind::k5) pick_piece_edge(g, t.pieces[fresh], used, m);
    }

    check_invariant(m.empty() || 3 * static_cast<int>(m.size()) <= g.n - 2,
                    "matching exceeds a third of n - 2");
    check_invariant(is_planar(g.contract_pairs(m)),
                    "contracting the matching did not planarize the graph");
    std::sort(m.begin(), m.end());
    return m;
}

Partition k33_planar_partition(const Graph& g) {
    std::vector<std::pair<int, int>> m;
    if (g.m() > 0) m = k33_planarizing_matching(g, g.edges.front());

    std::vector<char> matched(g.n, 0);
    std::vector<std::vector<int>> bags;
    for (auto [u, v] : m) {
        bags.push_back({u, v});
        matched[u] = matched[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!matched[v]) bags.push_back({v});

    Partition p = make_partition(g, std::move(bags));
    check_invariant(is_planar(p.pattern), "partition pattern is not planar");
    return p;
}

PartitionDrawing k33_rectilinear_drawing(const Graph& g, std::uint64_t seed) {
    Partition p = k33_planar_partition(g);
    PartitionDrawing out = produce_drawing(p, seed);

    for (const auto& bends : out.drawing.bends)
        check_invariant(bends.empty(), "rectilinear drawing has a bend");
    const long long delta = g.max_degree();
    for (long long c : out.report.per_edge)
        check_invariant(c <= 2 * delta, "edge crossed more than 2*maxdeg times");
    // Edge count of the class (at most 3n-5) caps the total.
    const long long edge_cap = std::max(3LL * g.n - 5, 0LL);
    check_invariant(g.m() <= edge_cap, "edge count exceeds the 3n-5 class bound");
    check_invariant(out.report.total <= delta * edge_cap,
                    "total crossings exceed maxdeg*(3n-5)");
    return out;
}

}  // namespace plandec
