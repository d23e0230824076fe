#include "plandec/k5.hpp"

#include "plandec/decomp_tools.hpp"
#include "plandec/drawing_to_decomp.hpp"
#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"
#include "plandec/sum_tree.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <string>

namespace plandec {

// ---- proper 4-colouring -----------------------------------------------------

namespace {

// Flip colours c1 <-> c2 on the two-coloured component containing `start`
// (coloured vertices only).  Returns the component, so the caller can flip
// back by calling again with the same component.
std::vector<int> kempe_flip(const std::vector<std::vector<int>>& adj,
                            std::vector<int>& col, int start, int c1, int c2)
{
    std::vector<int> comp{start};
    std::vector<char> in(adj.size(), 0);
    in[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (int w : adj[comp[i]])
            if (!in[w] && (col[w] == c1 || col[w] == c2)) {
                in[w] = 1;
                comp.push_back(w);
            }
    for (int v : comp) col[v] = col[v] == c1 ? c2 : c1;
    return comp;
}

bool greedy_kempe_colour(const std::vector<std::vector<int>>& adj,
                         const std::vector<int>& order, std::vector<int>& col)
{
    const int n = static_cast<int>(adj.size());
    col.assign(n, -1);
    for (int v : order) {
        auto used_mask = [&]() {
            int mask = 0;
            for (int w : adj[v])
                if (col[w] >= 0) mask |= 1 << col[w];
            return mask;
        };
        int mask = used_mask();
        if (mask != 0xf) {
            for (int c = 0; c < 4; ++c)
                if (!(mask & (1 << c))) {
                    col[v] = c;
                    break;
                }
            continue;
        }
        bool fixed = false;
        for (int c1 = 0; c1 < 4 && !fixed; ++c1)
            for (int c2 = 0; c2 < 4 && !fixed; ++c2) {
                if (c1 == c2) continue;
                for (int w : adj[v]) {
                    if (col[w] != c1) continue;
                    auto comp = kempe_flip(adj, col, w, c1, c2);
                    if (!(used_mask() & (1 << c1))) {
                        col[v] = c1;
                        fixed = true;
                        break;
                    }
                    for (int x : comp) col[x] = col[x] == c1 ? c2 : c1;
                }
            }
        if (!fixed) return false;
    }
    return true;
}

bool exact_colour(const std::vector<std::vector<int>>& adj, const std::vector<int>& order,
                  std::vector<int>& col)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    col.assign(n, -1);
    long long budget = 30'000'000;

    // Most-constrained-vertex backtracking; ties by the smallest-last rank.
    auto pick = [&]() {
        int best = -1, best_ct = 5;
        for (int v = 0; v < n; ++v) {
            if (col[v] >= 0) continue;
            int mask = 0;
            for (int w : adj[v])
                if (col[w] >= 0) mask |= 1 << col[w];
            int ct = 4 - __builtin_popcount(mask);
            if (ct < best_ct || (ct == best_ct && best >= 0 && rank[v] < rank[best])) {
                best = v;
                best_ct = ct;
            }
        }
        return best;
    };
    std::vector<std::pair<int, int>> trail;  // (vertex, next colour to try)
    int v = pick();
    int from = 0;
    while (v >= 0) {
        check_invariant(--budget > 0,
                        "four-colouring search budget exhausted on a planar input");
        int mask = 0;
        for (int w : adj[v])
            if (col[w] >= 0) mask |= 1 << col[w];
        int c = from;
        while (c < 4 && (mask & (1 << c))) ++c;
        if (c < 4) {
            col[v] = c;
            trail.emplace_back(v, c + 1);
            v = pick();
            from = 0;
        } else {
            if (trail.empty()) return false;
            auto [u, next] = trail.back();
            trail.pop_back();
            col[u] = -1;
            v = u;
            from = next;
        }
    }
    return true;
}

}  // namespace

std::vector<int> four_colour_planar(const Graph& g)
{
    check_precondition(is_planar(g), "four-colouring: planar input required");
    if (g.n == 0) return {};
    auto adj = g.adjacency();
    auto ord = degeneracy_order(g);
    std::vector<int> order(ord.removal.rbegin(), ord.removal.rend());

    std::vector<int> col;
    if (!greedy_kempe_colour(adj, order, col))
        check_invariant(exact_colour(adj, order, col),
                        "planar graph reported 4-chromatic failure");
    for (auto [u, v] : g.edges)
        check_invariant(col[u] != col[v] && col[u] >= 0 && col[u] < 4 && col[v] >= 0 &&
                            col[v] < 4,
                        "four-colouring produced an improper colouring");
    return col;
}

// ---- shared clique-sum plumbing --------------------------------------------

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

std::pair<int, int> canon(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Structural certificate that a decompose of an edge-maximal graph looks the
// part: planar pieces are triangulations, joins are undeleted cliques of size
// 2 or 3.  Violations mean the caller's input was not edge-maximal.
void require_maximal_structure(const Graph& g, const SumTree& t)
{
    check_precondition(!t.has_failure(), "input graph has a K5 minor");
    for (const auto& piece : t.pieces) {
        if (piece.kind == PieceKind::v8) continue;
        check_precondition(piece.kind == PieceKind::planar, "unexpected piece kind");
        int np = piece.graph.n;
        check_precondition(np >= 3 && piece.graph.m() == 3 * np - 6,
                           "not edge-maximal: a planar piece is not a triangulation");
    }
    for (const auto& join : t.joins) {
        check_precondition(static_cast<int>(join.set.size()) >= 2,
                           "not edge-maximal: clique-sum join of size <= 1");
        check_precondition(join.set.size() <= 3 && join.deleted.empty(),
                           "not edge-maximal: join is not an undeleted small clique");
        for (std::size_t i = 0; i < join.set.size(); ++i)
            for (std::size_t j = i + 1; j < join.set.size(); ++j)
                check_precondition(g.has_edge(join.set[i], join.set[j]),
                                   "not edge-maximal: join set is not a clique");
    }
}

// Ladder roles: cycle 0..7 plus chords {i, i+4}.  The three matchings below
// partition its edges; used by both the tripartition and the fixtures.
const std::array<std::array<std::pair<int, int>, 4>, 3> kLadderClasses = {{
    {{{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
    {{{1, 2}, {3, 4}, {5, 6}, {0, 7}}},
    {{{0, 4}, {1, 5}, {2, 6}, {3, 7}}},
}};

}  // namespace

// ---- edge tripartition ------------------------------------------------------

namespace {

// Class index of a colour pair under the pairing {01|23 -> 0, 02|13 -> 1,
// 03|12 -> 2}; the three edges of any properly coloured triangle land in
// three distinct classes.
int tait_class(int ca, int cb)
{
    int lo = std::min(ca, cb), hi = std::max(ca, cb);
    if ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) return 0;
    if ((lo == 0 && hi == 2) || (lo == 1 && hi == 3)) return 1;
    return 2;
}

EdgeTripartition edge_partition_from_tree(const Graph& g, const SumTree& t)
{
    require_maximal_structure(g, t);
    const int np = static_cast<int>(t.pieces.size());

    // Per piece: class of each local edge, before index alignment.
    std::vector<std::vector<int>> local_cls(np);
    for (int p = 0; p < np; ++p) {
        const auto& piece = t.pieces[p];
        local_cls[p].assign(piece.graph.m(), -1);
        if (piece.kind == PieceKind::v8) {
            std::vector<int> role;
            check_invariant(is_v8(piece.graph, &role), "v8 piece failed isomorphism");
            for (int j = 0; j < 3; ++j)
                for (auto [a, b] : kLadderClasses[j]) {
                    int e = piece.graph.edge_id(role[a], role[b]);
                    check_invariant(e >= 0, "ladder edge missing from v8 piece");
                    local_cls[p][e] = j;
                }
        } else {
            auto col = four_colour_planar(piece.graph);
            std::array<int, 3> count{0, 0, 0};
            for (int e = 0; e < piece.graph.m(); ++e) {
                auto [u, v] = piece.graph.edges[e];
                local_cls[p][e] = tait_class(col[u], col[v]);
                ++count[local_cls[p][e]];
            }
            for (int j = 0; j < 3; ++j)
                check_invariant(count[j] == piece.graph.n - 2,
                                "triangulation class sizes must all equal n-2");
        }
    }

    // Align classes across joins: perm[p] maps local class -> global class,
    // fixed by requiring each join edge to receive the same global class on
    // both sides.  A triangle join pins the whole permutation; an edge join
    // pins one value (completed lexicographically); piece 0 is the anchor.
    auto cls_of = [&](int p, int gu, int gv) {
        const auto& piece = t.pieces[p];
        int lu = -1, lv = -1;
        for (int x = 0; x < piece.graph.n; ++x) {
            if (piece.to_g[x] == gu) lu = x;
            if (piece.to_g[x] == gv) lv = x;
        }
        check_invariant(lu >= 0 && lv >= 0, "join vertex missing from its piece");
        int e = piece.graph.edge_id(lu, lv);
        check_invariant(e >= 0, "join edge missing from its piece");
        return local_cls[p][e];
    };
    std::vector<std::array<int, 3>> perm(np, {0, 1, 2});
    for (auto [j, fresh] : sum_tree_walk(t)) {
        const auto& join = t.joins[j];
        int base = join.a == fresh ? join.b : join.a;
        std::array<int, 3> want{-1, -1, -1};  // local class of fresh -> global
        for (std::size_t i = 0; i < join.set.size(); ++i)
            for (std::size_t l = i + 1; l < join.set.size(); ++l) {
                int target = perm[base][cls_of(base, join.set[i], join.set[l])];
                int source = cls_of(fresh, join.set[i], join.set[l]);
                check_invariant(want[source] == -1 || want[source] == target,
                                "join edges demand an inconsistent class alignment");
                want[source] = target;
            }
        // Fill unconstrained entries with the smallest unused global class.
        for (int s = 0; s < 3; ++s) {
            if (want[s] != -1) continue;
            for (int c = 0; c < 3; ++c)
                if (std::find(want.begin(), want.end(), c) == want.end()) {
                    want[s] = c;
                    break;
                }
        }
        check_invariant(want[0] != want[1] && want[0] != want[2] && want[1] != want[2],
                        "class alignment is not a permutation");
        perm[fresh] = want;
    }

    // Assemble global classes, checking consistency on shared (join) edges.
    std::vector<int> global(g.m(), -1);
    for (int p = 0; p < np; ++p) {
        const auto& piece = t.pieces[p];
        for (int e = 0; e < piece.graph.m(); ++e) {
            auto [u, v] = piece.graph.edges[e];
            int ge = g.edge_id(piece.to_g[u], piece.to_g[v]);
            check_invariant(ge >= 0, "piece edge missing from the input graph");
            int c = perm[p][local_cls[p][e]];
            check_invariant(global[ge] == -1 || global[ge] == c,
                            "shared edge classed inconsistently across pieces");
            global[ge] = c;
        }
    }

    EdgeTripartition out;
    std::array<std::vector<char>, 3> hit;
    for (auto& h : hit) h.assign(g.n, 0);
    for (int e = 0; e < g.m(); ++e) {
        check_invariant(global[e] >= 0, "edge missed by every piece");
        out.cls[global[e]].push_back(g.edges[e]);
        hit[global[e]][g.edges[e].first] = 1;
        hit[global[e]][g.edges[e].second] = 1;
    }
    for (int j = 0; j < 3; ++j) {
        check_invariant(static_cast<int>(out.cls[j].size()) <= g.n - 2,
                        "tripartition class larger than n-2");
        for (int v = 0; v < g.n; ++v)
            if (!hit[j][v]) out.missed[j].push_back(v);
    }
    for (int v = 0; v < g.n; ++v) {
        int met = (hit[0][v] ? 1 : 0) + (hit[1][v] ? 1 : 0) + (hit[2][v] ? 1 : 0);
        check_invariant(met >= 2, "a vertex meets fewer than two classes");
    }
    for (const auto& tri : enumerate_cliques(g, 3)) {
        if (tri.size() != 3) continue;
        int a = global[g.edge_id(tri[0], tri[1])];
        int b = global[g.edge_id(tri[0], tri[2])];
        int c = global[g.edge_id(tri[1], tri[2])];
        check_invariant(a != b && a != c && b != c,
                        "triangle not tri-partitioned across the classes");
    }
    return out;
}

}  // namespace

EdgeTripartition edge_partition_k5(const Graph& g)
{
    check_precondition(g.n >= 3, "edge tripartition needs at least three vertices");
    return edge_partition_from_tree(g, wagner_k5_decompose(g));
}

// ---- bag-per-edge (omega) decomposition -------------------------------------

namespace {

int find_pair_bag(const Decomposition& d, int u, int v)
{
    auto key = canon(u, v);
    for (int b = 0; b < d.order(); ++b)
        if (d.bags[b].size() == 2 && d.bags[b][0] == key.first && d.bags[b][1] == key.second)
            return b;
    return -1;
}

int find_singleton(const Decomposition& d, int u)
{
    for (int b = 0; b < d.order(); ++b)
        if (d.bags[b].size() == 1 && d.bags[b][0] == u) return b;
    return -1;
}

bool bag_has(const Decomposition& d, int b, int v)
{
    return std::binary_search(d.bags[b].begin(), d.bags[b].end(), v);
}

// Smallest bag containing u (preferring u's singleton, which is then u's
// only bag anyway).
int find_home(const Decomposition& d, int u)
{
    for (int b = 0; b < d.order(); ++b)
        if (bag_has(d, b, u)) return b;
    return -1;
}

int find_adjacent_bag(const Decomposition& d, int u, int to)
{
    for (int b = 0; b < d.order(); ++b)
        if (bag_has(d, b, u) && d.host.has_edge(std::min(b, to), std::max(b, to)))
            return b;
    return -1;
}

// First host edge (in the host's canonical edge order) joining a bag with u
// to a bag with v.
std::pair<int, int> find_port_pair(const Decomposition& d, int u, int v)
{
    for (auto [x, y] : d.host.edges) {
        if (bag_has(d, x, u) && bag_has(d, y, v)) return {x, y};
        if (bag_has(d, y, u) && bag_has(d, x, v)) return {y, x};
    }
    return {-1, -1};
}

// Width-2 decomposition of one sum-tree piece with one bag per e_set edge
// and one per uncovered vertex.  Virtual piece edges (join pairs absent from
// the input graph) participate as plain host edges, which keeps the bags of
// every join vertex pair adjacent for the later merge.
Decomposition omega_piece(const SumPiece& piece, const EdgeSet& eset)
{
    const Graph& P = piece.graph;
    std::vector<std::pair<int, int>> eloc;  // local pairs, canonical order
    std::vector<int> edge_bag(P.m(), -1);
    for (int e = 0; e < P.m(); ++e) {
        auto [u, v] = P.edges[e];
        if (eset.count(canon(piece.to_g[u], piece.to_g[v])))
            edge_bag[e] = static_cast<int>(eloc.size()), eloc.push_back(P.edges[e]);
    }

    if (piece.kind == PieceKind::v8) {
        std::vector<char> covered(P.n, 0);
        for (auto [u, v] : eloc) covered[u] = covered[v] = 1;
        bool pm = eloc.size() == 4 &&
                  std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
        check_precondition(pm,
                           "edge set restricted to a Moebius-ladder piece must be a "
                           "perfect matching");
        std::vector<std::vector<int>> bags;
        for (auto [u, v] : eloc) bags.push_back({piece.to_g[u], piece.to_g[v]});
        std::vector<std::pair<int, int>> he;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) he.emplace_back(a, b);
        return Decomposition::make(Graph::from_edges(4, std::move(he)), std::move(bags));
    }

    // Planar piece: one bag per e_set edge plus singletons, host built from
    // the subdivided piece by rerouting each triangle's two plain edges into
    // one spoke from the apex to the triangle's e_set bag.
    std::vector<int> home(P.n, -1);  // smallest e_set bag at v, else -1
    for (int i = 0; i < static_cast<int>(eloc.size()); ++i) {
        auto [u, v] = eloc[i];
        if (home[u] < 0) home[u] = i;
        if (home[v] < 0) home[v] = i;
    }
    std::vector<std::vector<int>> bags;
    std::vector<int> sing(P.n, -1);
    for (int v = 0; v < P.n; ++v)
        if (home[v] < 0) {
            sing[v] = static_cast<int>(eloc.size() + bags.size());
            bags.push_back({piece.to_g[v]});
        }
    std::vector<std::vector<int>> all_bags;
    for (auto [u, v] : eloc) {
        auto key = canon(piece.to_g[u], piece.to_g[v]);
        all_bags.push_back({key.first, key.second});
    }
    all_bags.insert(all_bags.end(), bags.begin(), bags.end());
    auto node_of = [&](int v) { return home[v] >= 0 ? home[v] : sing[v]; };

    std::vector<char> removed(P.m(), 0);
    std::vector<std::pair<int, int>> he;
    for (const auto& tri : enumerate_cliques(P, 3)) {
        if (tri.size() != 3) continue;
        int in_e = 0, f = -1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int e = P.edge_id(tri[i], tri[j]);
                if (edge_bag[e] >= 0) ++in_e, f = e;
            }
        if (in_e != 1) continue;  // only possible through virtual edges
        int apex = tri[0] + tri[1] + tri[2] - P.edges[f].first - P.edges[f].second;
        removed[P.edge_id(apex, P.edges[f].first)] = 1;
        removed[P.edge_id(apex, P.edges[f].second)] = 1;
        he.emplace_back(node_of(apex), edge_bag[f]);
    }
    for (int e = 0; e < P.m(); ++e) {
        auto [u, v] = P.edges[e];
        if (edge_bag[e] >= 0) {
            if (node_of(u) != edge_bag[e]) he.emplace_back(node_of(u), edge_bag[e]);
            if (node_of(v) != edge_bag[e]) he.emplace_back(node_of(v), edge_bag[e]);
        } else if (!removed[e]) {
            he.emplace_back(node_of(u), node_of(v));
        }
    }
    for (auto& [a, b] : he)
        if (a > b) std::swap(a, b);
    Graph host = Graph::from_edges(static_cast<int>(all_bags.size()), std::move(he),
                                   /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(all_bags));
}

// Glue two cluster decompositions along a join set.  Port bags covering the
// join are connected by the four-edge pattern between one host edge per side
// (which keeps the union planar), duplicated bags are contracted, and
// singletons of join vertices matched on the other side are absorbed.
Decomposition merge_omega(const Decomposition& A, const Decomposition& B,
                          const std::vector<int>& C, const EdgeSet& eset)
{
    const int off = A.order();
    std::vector<std::pair<int, int>> he = A.host.edges;
    for (auto [u, v] : B.host.edges) he.emplace_back(u + off, v + off);
    std::vector<std::pair<int, int>> contract;

    auto link_vertex = [&](int v, int pa, int pb) {
        // pa/pb: the port bags of v already connected by a cross edge.
        int sa = find_singleton(A, v), sb = find_singleton(B, v);
        if (sa >= 0 && sb >= 0)
            contract.emplace_back(sa, sb + off);
        else if (sa >= 0)
            contract.emplace_back(pb + off, sa);
        else if (sb >= 0)
            contract.emplace_back(pa, sb + off);
    };

    if (C.size() == 3) {
        int eu = -1, ev = -1, apex = -1, in_e = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (eset.count(canon(C[i], C[j]))) {
                    ++in_e;
                    eu = C[i], ev = C[j];
                    apex = C[0] + C[1] + C[2] - C[i] - C[j];
                }
        check_invariant(in_e == 1, "join triangle must carry exactly one e_set edge");
        int xa = find_pair_bag(A, eu, ev), xb = find_pair_bag(B, eu, ev);
        check_invariant(xa >= 0 && xb >= 0, "join edge bag missing from a side");
        int ya = find_adjacent_bag(A, apex, xa), yb = find_adjacent_bag(B, apex, xb);
        check_invariant(ya >= 0 && yb >= 0,
                        "no apex bag adjacent to the join edge bag (cover invariant)");
        for (int a : {xa, ya})
            for (int b : {xb, yb}) he.emplace_back(a, b + off);
        contract.emplace_back(xa, xb + off);
        link_vertex(apex, ya, yb);
    } else if (C.size() == 2 && eset.count(canon(C[0], C[1]))) {
        int xa = find_pair_bag(A, C[0], C[1]), xb = find_pair_bag(B, C[0], C[1]);
        check_invariant(xa >= 0 && xb >= 0, "join edge bag missing from a side");
        he.emplace_back(xa, xb + off);
        contract.emplace_back(xa, xb + off);
    } else if (C.size() == 2) {
        auto [au, av] = find_port_pair(A, C[0], C[1]);
        auto [bu, bv] = find_port_pair(B, C[0], C[1]);
        check_invariant(au >= 0 && bu >= 0,
                        "no adjacent bag pair covers the join (port invariant)");
        for (int a : {au, av})
            for (int b : {bu, bv}) he.emplace_back(a, b + off);
        link_vertex(C[0], au, bu);
        link_vertex(C[1], av, bv);
    } else if (C.size() == 1) {
        int pa = find_singleton(A, C[0]), pb = find_singleton(B, C[0]);
        if (pa < 0) pa = find_home(A, C[0]);
        if (pb < 0) pb = find_home(B, C[0]);
        check_invariant(pa >= 0 && pb >= 0, "join vertex missing from a side");
        he.emplace_back(pa, pb + off);
        link_vertex(C[0], pa, pb);
    }
    // Empty join: plain disjoint union.

    std::vector<std::vector<int>> bags = A.bags;
    bags.insert(bags.end(), B.bags.begin(), B.bags.end());
    for (auto& [a, b] : he)
        if (a > b) std::swap(a, b);
    Graph host = Graph::from_edges(A.order() + B.order(), std::move(he),
                                   /*allow_duplicates=*/true);
    Decomposition d = Decomposition::make(std::move(host), std::move(bags));
    if (!contract.empty()) d = contract_decomp_matching(d, contract);
    return d;
}

Decomposition omega_from_tree(const Graph& g, const SumTree& t, const EdgeSet& eset)
{
    check_precondition(!t.has_failure(), "input graph has a K5 minor");
    for (const auto& join : t.joins)
        if (join.set.size() == 3)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    check_invariant(g.has_edge(join.set[i], join.set[j]),
                                    "triangle joins must be real triangles");

    std::vector<Decomposition> built(t.pieces.size());
    for (std::size_t p = 0; p < t.pieces.size(); ++p) built[p] = omega_piece(t.pieces[p], eset);

    Decomposition acc = built[0];
    for (auto [j, fresh] : sum_tree_walk(t)) acc = merge_omega(acc, built[fresh], t.joins[j].set, eset);

    // The promised bag set, verified exactly: one bag per e_set edge plus one
    // singleton per vertex untouched by e_set.
    std::vector<char> matched(g.n, 0);
    std::vector<std::vector<int>> expect;
    for (auto [u, v] : eset) {
        expect.push_back({u, v});
        matched[u] = matched[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!matched[v]) expect.push_back({v});
    auto got = acc.bags;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    check_invariant(got == expect, "bag set differs from the e_set contract");
    check_invariant(acc.width() <= 2, "bag-per-edge decomposition exceeded width 2");
    check_invariant(is_planar(acc.host), "bag-per-edge decomposition host not planar");
    acc.p = std::max(2, clique_number(g));
    return acc;
}

}  // namespace

Decomposition omega_decomp_from_E(const Graph& g,
                                  const std::vector<std::pair<int, int>>& e_set)
{
    check_precondition(g.n >= 1, "nonempty graph required");
    EdgeSet eset;
    for (auto [u, v] : e_set) {
        check_precondition(g.has_edge(u, v), "e_set must consist of edges of the graph");
        eset.insert(canon(u, v));
    }
    for (const auto& tri : enumerate_cliques(g, 3)) {
        if (tri.size() != 3) continue;
        int in_e = static_cast<int>(eset.count(canon(tri[0], tri[1]))) +
                   static_cast<int>(eset.count(canon(tri[0], tri[2]))) +
                   static_cast<int>(eset.count(canon(tri[1], tri[2])));
        check_precondition(in_e == 1, "every triangle needs exactly one e_set edge");
    }
    return omega_from_tree(g, wagner_k5_decompose(g), eset);
}

Decomposition planar_omega_decomp_k5(const Graph& g)
{
    check_precondition(g.n >= 3, "pipeline needs at least three vertices");
    Graph h = maximal_k5_completion(g);
    SumTree t = wagner_k5_decompose(h);
    EdgeTripartition part = edge_partition_from_tree(h, t);

    int best = 0;
    for (int j = 1; j < 3; ++j)
        if (part.missed[j].size() < part.missed[best].size()) best = j;
    check_invariant(3 * static_cast<int>(part.missed[best].size()) <= g.n,
                    "every class misses more than n/3 vertices");

    EdgeSet eset(part.cls[best].begin(), part.cls[best].end());
    Decomposition d = omega_from_tree(h, t, eset);
    d.p = std::max(2, clique_number(g));

    int doubletons = 0, singletons = 0;
    for (const auto& bag : d.bags) (bag.size() == 2 ? doubletons : singletons)++;
    check_invariant(doubletons <= g.n - 2, "more than n-2 two-vertex bags");
    check_invariant(3 * singletons <= g.n, "more than n/3 singleton bags");
    check_invariant(3 * d.order() <= 4 * g.n - 6, "order exceeds 4n/3 - 2");
    return d;
}

RenderResult crossings_k5(const Graph& g, std::uint64_t seed)
{
    if (g.n <= 2) {
        std::vector<Pt> pts;
        for (int v = 0; v < g.n; ++v) pts.push_back({rat(v), rat(0)});
        RenderResult r;
        r.drawing = Drawing::straight_line(g, std::move(pts));
        r.route_bags.assign(g.m(), 1);
        return r;
    }
    Decomposition d = planar_omega_decomp_k5(g);
    RenderResult r = render_decomposition(g, d, seed);
    if (g.m() > 0) {
        long long delta = g.max_degree();
        check_invariant(3 * r.crossings < 20 * delta * delta * g.n,
                        "crossing total reached the 20/3 * maxdeg^2 * n bound");
    } else {
        check_invariant(r.crossings == 0, "edgeless graph drawn with crossings");
    }
    return r;
}

// ---- strong width-3 decomposition -------------------------------------------

namespace {

// One bag per triangular face, adjacent when the faces share an edge.  The
// host is the dual graph of the (embedded) triangulation.
Decomposition face_dual_decomp(const SumPiece& piece)
{
    const Graph& P = piece.graph;
    if (P.n == 3)
        return Decomposition::make(Graph(1),
                                   {{piece.to_g[0], piece.to_g[1], piece.to_g[2]}},
                                   /*strong=*/true, /*p=*/3);
    PlanarEmbedding emb;
    check_invariant(is_planar(P, &emb), "triangulation piece must be planar");
    auto fs = faces(P, emb);
    check_invariant(static_cast<int>(fs.size()) == 2 * P.n - 4,
                    "triangulation must have 2n-4 faces");
    std::vector<std::vector<int>> bags;
    for (const auto& f : fs) {
        check_invariant(f.walk.size() == 3, "non-triangular face in a triangulation");
        std::vector<int> bag;
        for (int v : f.vertices()) bag.push_back(piece.to_g[v]);
        bags.push_back(std::move(bag));
    }
    std::vector<std::pair<int, int>> he;
    for (auto [f1, f2] : edge_faces(P, emb)) {
        check_invariant(f1 != f2, "bridge inside a triangulation");
        he.emplace_back(std::min(f1, f2), std::max(f1, f2));
    }
    Graph host = Graph::from_edges(static_cast<int>(bags.size()), std::move(he),
                                   /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(bags), /*strong=*/true, /*p=*/3);
}

Decomposition relabel_decomp(const Decomposition& d, const std::vector<int>& map,
                             bool strong, int p)
{
    std::vector<std::vector<int>> bags(d.order());
    for (int b = 0; b < d.order(); ++b)
        for (int v : d.bags[b]) bags[b].push_back(map[v]);
    return Decomposition::make(d.host, std::move(bags), strong, p);
}

// Strong width-2 order-13 decomposition of a ladder piece, extracted from the
// one-crossing drawing and relabelled into input ids.
Decomposition ladder_strong_decomp(const SumPiece& piece, int p)
{
    std::vector<int> role;
    check_invariant(is_v8(piece.graph, &role), "v8 piece failed isomorphism");
    ExtractionResult ex = drawing_to_decomposition(v8_one_crossing_drawing(), /*strong=*/true);
    check_invariant(ex.decomp.order() == 13 && ex.decomp.width() == 2,
                    "ladder extraction must have width 2 and order 13");
    std::vector<int> map(8);
    for (int r = 0; r < 8; ++r) map[r] = piece.to_g[role[r]];
    return relabel_decomp(ex.decomp, map, /*strong=*/true, p);
}

// Merge strong piece decompositions along the join tree; each side covers the
// join in one bag, and a triangle join's two face bags (both equal to the
// join) are contracted together.
Decomposition merge_strong(const Graph& g, const SumTree& t,
                           const std::vector<Decomposition>& built, bool contract_triangles)
{
    std::vector<int> ident(g.n);
    for (int v = 0; v < g.n; ++v) ident[v] = v;
    Decomposition acc = built[0];
    for (auto [j, fresh] : sum_tree_walk(t)) {
        SumCovers cov;
        acc = clique_sum_decomp(ident, acc, ident, built[fresh], t.joins[j].set, &cov);
        if (contract_triangles && t.joins[j].set.size() == 3) {
            check_invariant(acc.bags[cov.x1].size() == 3 && acc.bags[cov.x2].size() == 3,
                            "triangle join must be covered by two face bags");
            acc = contract_decomp_edge(acc, cov.x1, cov.x2);
        }
    }
    return acc;
}

}  // namespace

Decomposition strong_3_decomp_k5(const Graph& g)
{
    check_precondition(g.n >= 3, "strong width-3 decomposition needs n >= 3");
    Graph h = maximal_k5_completion(g);
    SumTree t = wagner_k5_decompose(h);
    require_maximal_structure(h, t);

    std::vector<Decomposition> built(t.pieces.size());
    for (std::size_t p = 0; p < t.pieces.size(); ++p)
        built[p] = t.pieces[p].kind == PieceKind::v8 ? ladder_strong_decomp(t.pieces[p], 3)
                                                     : face_dual_decomp(t.pieces[p]);
    Decomposition d = merge_strong(h, t, built, /*contract_triangles=*/true);
    check_invariant(d.width() <= 3, "strong 3-decomposition exceeded width 3");
    if (g.n >= 4)
        check_invariant(d.order() <= 3 * g.n - 8, "order exceeds 3n-8");
    else
        check_invariant(d.order() == 1, "triangle input must yield one bag");
    return d;
}

// ---- strong width-4 clique-covering decomposition ----------------------------

namespace {

// One quadruple bag per edge of one Tait class: the union of the edge's two
// incident triangles.  Every face carries exactly one class edge, so every
// edge and triangle of the piece lands inside some bag.
Decomposition tait_quad_decomp(const SumPiece& piece)
{
    const Graph& P = piece.graph;
    if (P.n == 3)
        return Decomposition::make(Graph(1),
                                   {{piece.to_g[0], piece.to_g[1], piece.to_g[2]}},
                                   /*strong=*/true, /*p=*/4);
    if (P.n == 4) {
        check_invariant(P.m() == 6, "four-vertex triangulation must be complete");
        return Decomposition::make(
            Graph(1), {{piece.to_g[0], piece.to_g[1], piece.to_g[2], piece.to_g[3]}},
            /*strong=*/true, /*p=*/4);
    }

    auto col = four_colour_planar(P);
    std::vector<int> sclass;  // edge ids of class 0
    for (int e = 0; e < P.m(); ++e)
        if (tait_class(col[P.edges[e].first], col[P.edges[e].second]) == 0)
            sclass.push_back(e);
    check_invariant(static_cast<int>(sclass.size()) == P.n - 2,
                    "Tait class size must be n-2");

    PlanarEmbedding emb;
    check_invariant(is_planar(P, &emb), "triangulation piece must be planar");
    auto fs = faces(P, emb);
    auto ef = edge_faces(P, emb);
    std::vector<int> sedge_of_face(fs.size(), -1);
    for (int i = 0; i < static_cast<int>(sclass.size()); ++i) {
        auto [f1, f2] = ef[sclass[i]];
        check_invariant(f1 != f2 && sedge_of_face[f1] == -1 && sedge_of_face[f2] == -1,
                        "each face must carry exactly one class edge");
        sedge_of_face[f1] = sedge_of_face[f2] = i;
    }
    for (int v : sedge_of_face) check_invariant(v >= 0, "face without a class edge");

    std::vector<std::vector<int>> bags(sclass.size());
    for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
        auto& bag = bags[sedge_of_face[f]];
        for (int v : fs[f].vertices()) bag.push_back(v);
    }
    std::vector<int> home(P.n, -1);
    for (int b = 0; b < static_cast<int>(bags.size()); ++b)
        for (int v : bags[b])
            if (home[v] < 0) home[v] = b;
    std::vector<std::pair<int, int>> he;
    for (int b = 0; b < static_cast<int>(bags.size()); ++b)
        for (int v : bags[b])
            if (home[v] != b) he.emplace_back(std::min(home[v], b), std::max(home[v], b));
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        check_invariant(bag.size() == 4, "two incident triangles must span 4 vertices");
        for (int& v : bag) v = piece.to_g[v];
    }
    Graph host = Graph::from_edges(static_cast<int>(bags.size()), std::move(he),
                                   /*allow_duplicates=*/true);
    Decomposition d =
        Decomposition::make(std::move(host), std::move(bags), /*strong=*/true, /*p=*/4);
    check_invariant(is_planar(d.host), "quadruple-bag host must be planar");
    return d;
}

// The ladder's strong width-4 decomposition: four quadruples around a 4-cycle.
Decomposition ladder_quad_decomp(const SumPiece& piece)
{
    std::vector<int> role;
    check_invariant(is_v8(piece.graph, &role), "v8 piece failed isomorphism");
    auto at = [&](int r) { return piece.to_g[role[r]]; };
    std::vector<std::vector<int>> bags = {{at(0), at(1), at(4), at(5)},
                                          {at(1), at(2), at(5), at(6)},
                                          {at(2), at(3), at(6), at(7)},
                                          {at(3), at(4), at(7), at(0)}};
    Graph host = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    return Decomposition::make(std::move(host), std::move(bags), /*strong=*/true, /*p=*/4);
}

}  // namespace

Decomposition strong_omega_decomp_k5(const Graph& g)
{
    check_precondition(g.n >= 4, "strong clique-covering decomposition needs n >= 4");
    Graph h = maximal_k5_completion(g);
    SumTree t = wagner_k5_decompose(h);
    require_maximal_structure(h, t);

    std::vector<Decomposition> built(t.pieces.size());
    for (std::size_t p = 0; p < t.pieces.size(); ++p)
        built[p] = t.pieces[p].kind == PieceKind::v8 ? ladder_quad_decomp(t.pieces[p])
                                                     : tait_quad_decomp(t.pieces[p]);
    Decomposition d = merge_strong(h, t, built, /*contract_triangles=*/false);
    check_invariant(d.width() <= 4, "strong clique-covering decomposition exceeded width 4");
    check_invariant(3 * d.order() <= 4 * g.n - 12, "order exceeds 4n/3 - 4");
    return d;
}

// ---- ladder fixtures ---------------------------------------------------------

Drawing v8_one_crossing_drawing()
{
    Graph g = v8_graph();
    auto P = [](long long x, long long y) { return Pt{rat(x), rat(y)}; };
    std::vector<Pt> pts = {P(40, 80), P(28, 24), P(40, 20),  P(52, 32),
                           P(0, 40),  P(20, 0),  P(40, -10), P(80, 20)};
    Drawing d = Drawing::straight_line(std::move(g), std::move(pts));
    d.bends[d.g.edge_id(0, 1)] = {P(26, 37)};  // reroutes {0,1} across {3,4}
    return d;
}

Decomposition v8_omega_decomposition()
{
    std::vector<std::vector<int>> bags = {{0, 1}, {2, 3}, {4, 5}, {6, 7},
                                          {0, 4}, {1, 5}, {2, 6}};
    Graph host = Graph::from_edges(7, {{0, 1},
                                       {1, 2},
                                       {2, 3},
                                       {0, 3},
                                       {1, 3},
                                       {0, 4},
                                       {2, 4},
                                       {0, 5},
                                       {2, 5},
                                       {1, 6},
                                       {3, 6}});
    return Decomposition::make(std::move(host), std::move(bags), /*strong=*/false, /*p=*/2);
}

}  // namespace plandec
