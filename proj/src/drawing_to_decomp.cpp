#include "plandec/drawing_to_decomp.hpp"

#include "plandec/errors.hpp"
#include "plandec/matching.hpp"
#include "plandec/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace plandec {
namespace {

/// Crossing structure of a proper drawing: every crossing event plus, per
/// edge, its events ordered along the polyline from the first endpoint.
struct Skeleton {
    std::vector<CrossingEvent> events;
    std::vector<std::vector<int>> along;  ///< edge -> event ids in route order
    std::vector<int> pos_a;               ///< event -> 1-based rank along events[i].e
    std::vector<int> pos_b;               ///< event -> 1-based rank along events[i].f
    long long crossings = 0;

    int rank(int e) const { return static_cast<int>(along[e].size()); }
};

Skeleton build_skeleton(const Drawing& dr) {
    Skeleton sk;
    CrossingReport rep = count_crossings(dr, &sk.events);
    if (!rep.proper())
        throw precondition_error("drawing is not in general position: " + rep.degeneracies.front());
    for (const auto& ev : sk.events) {
        auto [a, b] = dr.g.edges[ev.e];
        auto [c, d] = dr.g.edges[ev.f];
        check_precondition(a != c && a != d && b != c && b != d,
                           "edges sharing an endpoint cross; extraction needs independent crossings");
    }
    sk.crossings = rep.total;

    const int m = dr.g.m();
    std::vector<std::vector<std::tuple<int, rat, int>>> keyed(m);
    for (int i = 0; i < static_cast<int>(sk.events.size()); ++i) {
        keyed[sk.events[i].e].push_back({sk.events[i].seg_e, sk.events[i].t_e, i});
        keyed[sk.events[i].f].push_back({sk.events[i].seg_f, sk.events[i].t_f, i});
    }
    sk.along.assign(m, {});
    sk.pos_a.assign(sk.events.size(), 0);
    sk.pos_b.assign(sk.events.size(), 0);
    for (int e = 0; e < m; ++e) {
        std::sort(keyed[e].begin(), keyed[e].end());
        for (int r = 0; r < static_cast<int>(keyed[e].size()); ++r) {
            int i = std::get<2>(keyed[e][r]);
            sk.along[e].push_back(i);
            (sk.events[i].e == e ? sk.pos_a : sk.pos_b)[i] = r + 1;
        }
    }
    return sk;
}

/// Node layout of the planarized host before merging: one singleton per
/// graph vertex, one node per crossing, optionally one touch node per edge.
struct Nodes {
    int n = 0, crossings = 0, m = 0;
    bool touch = false;

    int total() const { return n + crossings + (touch ? m : 0); }
    int crossing_node(int event) const { return n + event; }
    int touch_node(int e) const { return n + crossings + e; }
};

/// Contents of every planarization node.  A crossing bag holds one endpoint
/// of each of its two edges, chosen by the split: along edge e the first
/// split[e] crossings host the first endpoint, the rest host the second.
std::vector<std::vector<int>> node_contents(const Graph& g, const Skeleton& sk,
                                            const std::vector<int>& split, const Nodes& nd) {
    std::vector<std::vector<int>> content(nd.total());
    for (int v = 0; v < g.n; ++v) content[v] = {v};
    for (int i = 0; i < static_cast<int>(sk.events.size()); ++i) {
        const auto& ev = sk.events[i];
        auto [ue, ve] = g.edges[ev.e];
        auto [uf, vf] = g.edges[ev.f];
        int a = sk.pos_a[i] <= split[ev.e] ? ue : ve;
        int b = sk.pos_b[i] <= split[ev.f] ? uf : vf;
        content[nd.crossing_node(i)] = {std::min(a, b), std::max(a, b)};
    }
    if (nd.touch) {
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[e];
            content[nd.touch_node(e)] = {u, v};
        }
    }
    return content;
}

/// Host edges: each graph edge contributes the path singleton(u), its
/// crossing nodes in order, [touch node], singleton(v).
std::vector<std::pair<int, int>> host_edges(const Graph& g, const Skeleton& sk, const Nodes& nd) {
    std::vector<std::pair<int, int>> he;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        std::vector<int> chain{u};
        for (int i : sk.along[e]) chain.push_back(nd.crossing_node(i));
        if (nd.touch) chain.push_back(nd.touch_node(e));
        chain.push_back(v);
        for (size_t j = 0; j + 1 < chain.size(); ++j) he.push_back({chain[j], chain[j + 1]});
    }
    return he;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

/// Splits that cover as many crossed vertices as possible.  A vertex is
/// covered when some crossing bag contains it.  Within each component of the
/// crossed subgraph: an edge crossed twice or more can cover both endpoints,
/// a cycle can be oriented to cover all its vertices, and from any covered
/// seed a BFS covers everything else; only all-singly-crossed tree components
/// are stuck with one uncovered root.
std::vector<int> coverage_splits(const Graph& g, const Skeleton& sk, std::vector<char>& covered) {
    const int n = g.n, m = g.m();
    std::vector<int> split(m);
    for (int e = 0; e < m; ++e) split[e] = sk.rank(e);

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge), crossed only
    for (int e = 0; e < m; ++e) {
        if (sk.rank(e) == 0) continue;
        auto [u, v] = g.edges[e];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<char> uncrossed_nbr(n, 0), quiet(n, 0);
    {
        std::vector<char> has_crossed(n, 0);
        for (int e = 0; e < m; ++e)
            if (sk.rank(e) > 0) {
                auto [u, v] = g.edges[e];
                has_crossed[u] = has_crossed[v] = 1;
            }
        for (int v = 0; v < n; ++v) quiet[v] = !has_crossed[v];
        for (int e = 0; e < m; ++e)
            if (sk.rank(e) == 0) {
                auto [u, v] = g.edges[e];
                uncrossed_nbr[u] = uncrossed_nbr[v] = 1;
            }
    }

    auto cover_with = [&](int e, int far) {
        // choose split[e] so the bags of e include vertex `far`
        auto [u, v] = g.edges[e];
        int r = sk.rank(e);
        if (r >= 2)
            split[e] = 1;  // first bag holds u, the rest hold v: both covered
        else if (far == u)
            split[e] = r;
        else
            split[e] = 0;
    };

    std::vector<char> reached(n, 0);
    for (int s = 0; s < n; ++s) {
        if (reached[s] || adj[s].empty()) continue;
        // collect the component
        std::vector<int> cverts, cedges;
        {
            std::vector<char> eseen(m, 0);
            std::queue<int> q;
            q.push(s);
            reached[s] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                cverts.push_back(x);
                for (auto [w, e] : adj[x]) {
                    if (!eseen[e]) {
                        eseen[e] = 1;
                        cedges.push_back(e);
                    }
                    if (!reached[w]) {
                        reached[w] = 1;
                        q.push(w);
                    }
                }
            }
            std::sort(cverts.begin(), cverts.end());
            std::sort(cedges.begin(), cedges.end());
        }

        std::vector<int> frontier;
        int seed_edge = -1;
        for (int e : cedges)
            if (sk.rank(e) >= 2) {
                seed_edge = e;
                break;
            }
        if (seed_edge >= 0) {
            split[seed_edge] = 1;
            auto [u, v] = g.edges[seed_edge];
            frontier = {u, v};
        } else if (cedges.size() >= cverts.size()) {
            // find one cycle: first edge (ascending id) closing the growing forest
            DSU fdsu(n);
            int closing = -1;
            std::vector<std::vector<std::pair<int, int>>> fadj(n);
            for (int e : cedges) {
                auto [u, v] = g.edges[e];
                if (!fdsu.unite(u, v)) {
                    closing = e;
                    break;
                }
                fadj[u].push_back({v, e});
                fadj[v].push_back({u, e});
            }
            check_invariant(closing >= 0, "component with a cycle has a closing edge");
            auto [a, b] = g.edges[closing];
            // forest path a..b
            std::vector<int> par_v(n, -1), par_e(n, -1);
            std::queue<int> q;
            q.push(a);
            par_v[a] = a;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                if (x == b) break;
                for (auto [w, e] : fadj[x])
                    if (par_v[w] < 0) {
                        par_v[w] = x;
                        par_e[w] = e;
                        q.push(w);
                    }
            }
            check_invariant(par_v[b] >= 0, "closing edge endpoints are forest-connected");
            cover_with(closing, a);
            frontier.push_back(a);
            for (int x = b; x != a; x = par_v[x]) {
                cover_with(par_e[x], x);
                frontier.push_back(x);
            }
            std::sort(frontier.begin(), frontier.end());
        } else {
            // tree with every edge crossed once: one vertex stays uncovered.
            // Prefer a root that a later singleton merge can absorb: one with
            // an uncrossed edge to a quiet vertex, then any uncrossed edge.
            int root = -1;
            for (int v : cverts)
                if (uncrossed_nbr[v]) {
                    bool to_quiet = false;
                    for (int e = 0; e < m && !to_quiet; ++e)
                        if (sk.rank(e) == 0) {
                            auto [x, y] = g.edges[e];
                            if ((x == v && quiet[y]) || (y == v && quiet[x])) to_quiet = true;
                        }
                    if (to_quiet) {
                        root = v;
                        break;
                    }
                    if (root < 0) root = v;
                }
            if (root < 0) root = cverts.front();
            frontier = {root};
        }

        // BFS outward: each newly reached vertex is covered by its entry edge
        std::vector<char> cseen(n, 0);
        std::queue<int> q;
        for (int v : frontier) {
            cseen[v] = 1;
            q.push(v);
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [w, e] : adj[x])
                if (!cseen[w]) {
                    cseen[w] = 1;
                    cover_with(e, w);
                    q.push(w);
                }
        }
        for (int v : cverts) check_invariant(cseen[v], "crossed component fully explored");
    }

    covered.assign(n, 0);
    for (int e = 0; e < m; ++e) {
        int r = sk.rank(e);
        if (r == 0) continue;
        auto [u, v] = g.edges[e];
        if (split[e] >= 1) covered[u] = 1;
        if (split[e] < r) covered[v] = 1;
    }
    return split;
}

Decomposition assemble(const Nodes& nd, const std::vector<std::vector<int>>& content,
                       const std::vector<std::pair<int, int>>& he, DSU& dsu, bool strong_claim) {
    std::map<int, int> compact;
    for (int x = 0; x < nd.total(); ++x) {
        int r = dsu.find(x);
        if (!compact.count(r)) {
            int id = static_cast<int>(compact.size());
            compact[r] = id;
        }
    }
    std::vector<std::vector<int>> bags(compact.size());
    for (int x = 0; x < nd.total(); ++x) {
        auto& b = bags[compact[dsu.find(x)]];
        b.insert(b.end(), content[x].begin(), content[x].end());
    }
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::vector<std::pair<int, int>> mapped;
    for (auto [a, b] : he) {
        int x = compact[dsu.find(a)], y = compact[dsu.find(b)];
        if (x != y) mapped.push_back({std::min(x, y), std::max(x, y)});
    }
    Graph host = Graph::from_edges(static_cast<int>(bags.size()), std::move(mapped),
                                   /*allow_duplicates=*/true);
    return Decomposition::make(std::move(host), std::move(bags), strong_claim, 2);
}

bool strictly_convex_position(const std::vector<Pt>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return true;
    rat cx = 0, cy = 0;
    for (const Pt& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    Pt c{cx / n, cy / n};
    for (const Pt& p : pts)
        if (p == c) return false;
    // angular order around the interior witness point c
    auto half = [&](const Pt& p) { return (p.y > c.y || (p.y == c.y && p.x > c.x)) ? 0 : 1; };
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    bool same_ray = false;
    std::sort(ord.begin(), ord.end(), [&](int i, int j) {
        int hi = half(pts[i]), hj = half(pts[j]);
        if (hi != hj) return hi < hj;
        int s = orient_sign(c, pts[i], pts[j]);
        if (s == 0) same_ray = true;
        return s > 0;
    });
    if (same_ray) return false;
    for (int i = 0; i < n; ++i) {
        const Pt& a = pts[ord[i]];
        const Pt& b = pts[ord[(i + 1) % n]];
        const Pt& d = pts[ord[(i + 2) % n]];
        if (orient_sign(a, b, d) <= 0) return false;
    }
    return true;
}

}  // namespace

ExtractionResult drawing_to_decomposition(const Drawing& dr, bool strong) {
    const Graph& g = dr.g;
    Skeleton sk = build_skeleton(dr);
    const int n = g.n, m = g.m();
    const int C = static_cast<int>(sk.events.size());

    std::vector<char> has_edge_v(n, 0), has_crossed(n, 0);
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        has_edge_v[u] = has_edge_v[v] = 1;
        inc[u].push_back(e);
        inc[v].push_back(e);
        if (sk.rank(e) > 0) has_crossed[u] = has_crossed[v] = 1;
    }
    std::vector<int> isolated;
    int quiet = 0;
    for (int v = 0; v < n; ++v) {
        if (!has_edge_v[v])
            isolated.push_back(v);
        else if (!has_crossed[v])
            ++quiet;
    }
    const int n0 = static_cast<int>(isolated.size());

    std::vector<int> split(m);
    std::vector<char> covered;
    if (strong) {
        for (int e = 0; e < m; ++e) split[e] = sk.rank(e);  // all bags of e hold its first endpoint
    } else {
        split = coverage_splits(g, sk, covered);
    }

    Nodes nd{n, C, m, /*touch=*/strong};
    auto content = node_contents(g, sk, split, nd);
    auto he = host_edges(g, sk, nd);
    DSU dsu(nd.total());

    for (size_t i = 0; i + 1 < isolated.size(); i += 2) dsu.unite(isolated[i], isolated[i + 1]);

    int uncovered_count = 0, matched = 0;
    if (strong) {
        // every non-isolated singleton has an adjacent bag containing it:
        // the first crossing bag of an edge it heads, or the edge's touch bag
        for (int v = 0; v < n; ++v) {
            if (!has_edge_v[v]) continue;
            int e = inc[v].front();
            auto [u, w] = g.edges[e];
            (void)w;
            if (v == u && sk.rank(e) > 0)
                dsu.unite(v, nd.crossing_node(sk.along[e].front()));
            else
                dsu.unite(v, nd.touch_node(e));
        }
    } else {
        // absorb each covered vertex into an adjacent crossing bag holding it
        for (int v = 0; v < n; ++v) {
            if (!has_crossed[v] || !covered[v]) continue;
            int target = -1;
            for (int e : inc[v]) {
                int r = sk.rank(e);
                if (r == 0) continue;
                auto [u, w] = g.edges[e];
                (void)w;
                if (v == u && split[e] >= 1) {
                    target = nd.crossing_node(sk.along[e].front());
                    break;
                }
                if (v != u && split[e] < r) {
                    target = nd.crossing_node(sk.along[e].back());
                    break;
                }
            }
            check_invariant(target >= 0, "covered vertex has an absorbing crossing bag");
            dsu.unite(v, target);
        }
        // rescue leftover uncovered vertices by merging with an adjacent
        // surviving singleton along an uncrossed edge, maximizing the merges
        std::vector<char> in_single(n, 0), in_unc(n, 0);
        std::vector<int> singles;
        for (int v = 0; v < n; ++v) {
            if (!has_edge_v[v]) continue;
            bool unc = has_crossed[v] && !covered[v];
            if (unc || !has_crossed[v]) {
                in_single[v] = 1;
                in_unc[v] = unc;
                singles.push_back(v);
                if (unc) ++uncovered_count;
            }
        }
        std::vector<int> local(n, -1);
        for (int i = 0; i < static_cast<int>(singles.size()); ++i) local[singles[i]] = i;
        std::vector<std::pair<int, int>> medges;
        for (int e = 0; e < m; ++e) {
            if (sk.rank(e) > 0) continue;
            auto [u, v] = g.edges[e];
            if (in_single[u] && in_single[v] && (in_unc[u] || in_unc[v]))
                medges.push_back({local[u], local[v]});
        }
        auto mm = maximum_matching(Graph::from_edges(static_cast<int>(singles.size()), medges));
        for (auto [a, b] : mm) dsu.unite(singles[a], singles[b]);
        matched = static_cast<int>(mm.size());
    }

    ExtractionResult out;
    out.decomp = assemble(nd, content, he, dsu, strong);
    out.crossings = sk.crossings;
    out.isolated = n0;
    out.quiet = quiet;
    out.claimed_order = (n0 + 1) / 2 + C + (strong ? m : quiet);
    out.deficiency = strong ? 0 : uncovered_count - matched;
    check_invariant(out.decomp.order() == out.claimed_order + out.deficiency,
                    "extraction order accounting");
    return out;
}

ConvexExtraction convex_to_tree_decomposition(const Drawing& dr) {
    const Graph& g = dr.g;
    check_precondition(g.n >= 1, "convex extraction: empty graph");
    for (const auto& b : dr.bends)
        check_precondition(b.empty(), "convex extraction needs a straight-line drawing");
    Skeleton sk = build_skeleton(dr);
    check_precondition(strictly_convex_position(dr.points),
                       "vertices are not in strictly convex position");

    const int n = g.n, m = g.m();
    const int C = static_cast<int>(sk.events.size());
    ConvexExtraction out;
    out.crossings = sk.crossings;
    for (const auto& ev : sk.events)
        out.k = std::max(out.k, std::min(sk.rank(ev.e), sk.rank(ev.f)));

    // strong planarization, no absorption: singletons + crossing + touch bags
    std::vector<int> split(m);
    for (int e = 0; e < m; ++e) split[e] = sk.rank(e);
    Nodes nd{n, C, m, /*touch=*/true};
    auto content = node_contents(g, sk, split, nd);
    auto he = host_edges(g, sk, nd);
    const int hn = nd.total();

    // apex adjacent to every vertex bag; planar because the vertices are in
    // convex position (routes stay inside the hull, the apex sits outside)
    const int apex = hn;
    auto ae = he;
    for (int v = 0; v < n; ++v) ae.push_back({v, apex});
    Graph A = Graph::from_edges(hn + 1, ae);
    check_invariant(is_planar(A), "apexed planarization of a convex drawing is planar");

    const int depth_cap = out.k / 2 + 2;
    const int host_bag_cap = 3 * (out.k / 2) + 6;

    if (A.n < 3) {  // single vertex, no edges
        out.td.bags = {{0}};
        out.host_depth = 1;
        out.host_bag_max = 1;
        out.bag_max = 1;
    } else {
        Graph H = triangulate_planar(A);
        auto adjH = H.adjacency();
        std::vector<int> par(H.n, -1), depth(H.n, -1);
        std::queue<int> q;
        q.push(apex);
        depth[apex] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : adjH[x])
                if (depth[w] < 0) {
                    depth[w] = depth[x] + 1;
                    par[w] = x;
                    q.push(w);
                }
        }
        out.host_depth = *std::max_element(depth.begin(), depth.end());
        check_invariant(out.host_depth >= 1 && depth[apex] == 0, "apex reaches the whole host");
        check_invariant(out.host_depth <= depth_cap, "planarization depth exceeds crossing bound");

        PlanarEmbedding emb;
        check_invariant(is_planar(H, &emb), "triangulation stays planar");
        auto F = faces(H, emb);
        auto ef = edge_faces(H, emb);
        std::set<std::pair<int, int>> tree_edges;
        for (int v = 0; v < H.n; ++v)
            if (par[v] >= 0) tree_edges.insert({std::min(v, par[v]), std::max(v, par[v])});

        DSU fdsu(static_cast<int>(F.size()));
        std::vector<std::pair<int, int>> dual;
        for (int e = 0; e < H.m(); ++e) {
            if (tree_edges.count(H.edges[e])) continue;
            auto [f1, f2] = ef[e];
            check_invariant(f1 != f2, "triangulation has no bridges");
            check_invariant(fdsu.unite(f1, f2), "non-tree edges are dual-acyclic");
            dual.push_back({std::min(f1, f2), std::max(f1, f2)});
        }
        check_invariant(dual.size() + 1 == F.size(), "dual of the cotree spans the faces");

        // bag of a face: the three corners' tree paths to the apex, apex dropped
        out.td.bags.assign(F.size(), {});
        out.td.edges = dual;
        for (int fi = 0; fi < static_cast<int>(F.size()); ++fi) {
            std::set<int> bag;
            for (int x : F[fi].vertices())
                for (int y = x; y != apex; y = par[y]) bag.insert(y);
            out.td.bags[fi].assign(bag.begin(), bag.end());
            out.host_bag_max =
                std::max(out.host_bag_max, static_cast<int>(out.td.bags[fi].size()));
        }
        check_invariant(out.host_bag_max <= host_bag_cap, "host bags exceed the depth bound");

        // the same tree is a decomposition of the planarized host
        Graph hostg = Graph::from_edges(hn, he, /*allow_duplicates=*/true);
        std::string why;
        TreeDecomp host_td = out.td;
        check_invariant(is_valid_tree_decomposition(hostg, host_td, &why),
                        "host tree decomposition: " + why);

        // lift through the width-2 planarization bags
        for (auto& bag : out.td.bags) {
            std::set<int> lifted;
            for (int x : bag) lifted.insert(content[x].begin(), content[x].end());
            bag.assign(lifted.begin(), lifted.end());
            out.bag_max = std::max(out.bag_max, static_cast<int>(bag.size()));
        }
    }

    check_invariant(out.bag_max <= 2 * host_bag_cap, "lifted bags exceed twice the host bound");
    std::string why;
    check_invariant(is_valid_tree_decomposition(g, out.td, &why),
                    "lifted tree decomposition: " + why);
    check_invariant(out.td.width() <= 3 * out.k + 11, "treewidth bound from crossing structure");
    return out;
}

}  // namespace plandec
