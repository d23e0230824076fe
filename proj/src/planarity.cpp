// ════════════════════════════════════════════════════════════════════════
// Planarity layer: Boyer–Myrvold wrapper, face enumeration, triangulation
// by face chording, integer straight-line layout (canonical ordering +
// shift drawing), and outerplanarity via a universal apex.
// ════════════════════════════════════════════════════════════════════════

#include "plandec/planarity.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <boost/property_map/property_map.hpp>

#include "plandec/errors.hpp"

namespace plandec {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

/// BGL mirror of g; edge_index of the i-th canonical edge is i.
BoostGraph to_boost(const Graph& g) {
    BoostGraph b(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.m(); ++i)
        boost::add_edge(static_cast<std::size_t>(g.edges[i].first),
                        static_cast<std::size_t>(g.edges[i].second), i, b);
    return b;
}

/// Runs Boyer–Myrvold; on success optionally exports the rotation system.
bool planar_embed(const Graph& g, std::vector<std::vector<int>>* rotation) {
    BoostGraph b = to_boost(g);
    std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(g.n));
    auto emb = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, b));
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = b,
        boost::boyer_myrvold_params::embedding = emb);
    if (ok && rotation != nullptr) {
        auto index = boost::get(boost::edge_index, b);
        rotation->assign(static_cast<std::size_t>(g.n), {});
        for (int v = 0; v < g.n; ++v) {
            (*rotation)[v].reserve(storage[v].size());
            for (const BoostEdge& e : storage[v]) (*rotation)[v].push_back(index[e]);
        }
    }
    return ok;
}

/// Position of edge id e in rotation[v] (each incident edge appears once).
int rotation_index(const std::vector<int>& rot, int e) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == e) return i;
    throw invariant_error("edge missing from rotation list");
}

// ── Exact integer segment predicates for layout verification ──

using Coord = std::pair<long long, long long>;

int orient_sign(const Coord& a, const Coord& b, const Coord& c) {
    __int128 det = static_cast<__int128>(b.first - a.first) * (c.second - a.second) -
                   static_cast<__int128>(b.second - a.second) * (c.first - a.first);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool between(const Coord& a, const Coord& b, const Coord& p) {
    return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

/// True iff closed segments ab and cd share any point.
bool segments_touch(const Coord& a, const Coord& b, const Coord& c, const Coord& d) {
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && between(a, b, c)) return true;
    if (o2 == 0 && between(a, b, d)) return true;
    if (o3 == 0 && between(c, d, a)) return true;
    if (o4 == 0 && between(c, d, b)) return true;
    return false;
}

/// Exact sanity check of a straight-line layout of g: all points distinct,
/// no vertex interior to a non-incident edge, no two independent edges
/// touching anywhere, adjacent edges touching only at the shared vertex.
void verify_layout(const Graph& g, const std::vector<Coord>& xy) {
    std::vector<Coord> sorted = xy;
    std::sort(sorted.begin(), sorted.end());
    check_invariant(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                    "layout places two vertices at the same point");

    for (const auto& [u, v] : g.edges)
        for (int w = 0; w < g.n; ++w)
            if (w != u && w != v)
                check_invariant(!(orient_sign(xy[u], xy[v], xy[w]) == 0 &&
                                  between(xy[u], xy[v], xy[w])),
                                "layout places a vertex on a non-incident edge");

    // Sort-and-sweep on x so the exact test only runs for overlapping boxes.
    const int m = g.m();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto min_x = [&](int e) { return std::min(xy[g.edges[e].first].first, xy[g.edges[e].second].first); };
    auto max_x = [&](int e) { return std::max(xy[g.edges[e].first].first, xy[g.edges[e].second].first); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return min_x(a) < min_x(b); });
    std::vector<int> active;
    for (int oi = 0; oi < m; ++oi) {
        int e = order[oi];
        auto [u, v] = g.edges[e];
        std::vector<int> keep;
        for (int f : active) {
            if (max_x(f) < min_x(e)) continue;
            keep.push_back(f);
            auto [x, y] = g.edges[f];
            if (u == x || u == y || v == x || v == y) {
                // Shared endpoint: any other contact would mean overlap or a
                // crossing at a second point.
                int shared_u = (u == x || u == y) ? u : v;
                int other_e = shared_u == u ? v : u;
                int other_f = shared_u == x ? y : x;
                bool collinear_overlap = orient_sign(xy[shared_u], xy[other_e], xy[other_f]) == 0 &&
                                         (between(xy[shared_u], xy[other_e], xy[other_f]) ||
                                          between(xy[shared_u], xy[other_f], xy[other_e]));
                check_invariant(!collinear_overlap, "layout overlaps two adjacent edges");
            } else {
                check_invariant(!segments_touch(xy[u], xy[v], xy[x], xy[y]),
                                "layout crosses two independent edges");
            }
        }
        keep.push_back(e);
        active.swap(keep);
    }
}

} // namespace

// ════════════════════════════════════════════════════════════════════════
// Planarity test and faces
// ════════════════════════════════════════════════════════════════════════

bool is_planar(const Graph& g, PlanarEmbedding* emb) {
    if (emb == nullptr) return planar_embed(g, nullptr);
    if (!planar_embed(g, &emb->rotation)) return false;
    // Deterministic outer face: first among the longest walks.
    std::vector<Face> fs = faces(g, *emb);
    emb->outer_face = 0;
    for (int i = 1; i < static_cast<int>(fs.size()); ++i)
        if (fs[i].walk.size() > fs[emb->outer_face].walk.size()) emb->outer_face = i;
    return true;
}

std::vector<Face> faces(const Graph& g, const PlanarEmbedding& emb) {
    const int m = g.m();
    check_precondition(static_cast<int>(emb.rotation.size()) == g.n,
                       "embedding does not match graph");
    // visited[2e + dir]: dir 0 traverses the edge low->high, dir 1 high->low.
    std::vector<char> visited(static_cast<std::size_t>(2 * m), 0);
    std::vector<Face> out;
    int non_isolated = 0, edge_components = 0;
    {
        std::vector<int> deg = g.degrees();
        for (int v = 0; v < g.n; ++v)
            if (deg[v] > 0) ++non_isolated;
        int count = 0;
        std::vector<int> comp = g.components(&count);
        std::vector<char> has_edge_comp(static_cast<std::size_t>(count), 0);
        for (const auto& [u, v] : g.edges) has_edge_comp[comp[u]] = 1;
        edge_components = static_cast<int>(
            std::count(has_edge_comp.begin(), has_edge_comp.end(), 1));
    }
    for (int e0 = 0; e0 < m; ++e0) {
        for (int dir0 = 0; dir0 < 2; ++dir0) {
            if (visited[2 * e0 + dir0]) continue;
            Face face;
            int e = e0, dir = dir0;
            do {
                visited[2 * e + dir] = 1;
                int tail = dir == 0 ? g.edges[e].first : g.edges[e].second;
                int head = dir == 0 ? g.edges[e].second : g.edges[e].first;
                face.walk.emplace_back(tail, head);
                const std::vector<int>& rot = emb.rotation[head];
                int idx = rotation_index(rot, e);
                int ne = rot[(idx + 1) % static_cast<int>(rot.size())];
                e = ne;
                dir = g.edges[ne].first == head ? 0 : 1;
            } while (!(e == e0 && dir == dir0));
            out.push_back(std::move(face));
        }
    }
    // Euler's relation per component with edges: faces = m - n + 2c.
    check_invariant(static_cast<int>(out.size()) == m - non_isolated + 2 * edge_components,
                    "face traversal violates Euler's relation");
    return out;
}

std::vector<std::pair<int, int>> edge_faces(const Graph& g, const PlanarEmbedding& emb) {
    std::vector<Face> fs = faces(g, emb);
    std::vector<std::pair<int, int>> out(static_cast<std::size_t>(g.m()), {-1, -1});
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        for (const auto& [u, v] : fs[fi].walk) {
            int e = g.edge_id(u, v);
            if (u < v)
                out[e].first = fi;
            else
                out[e].second = fi;
        }
    }
    for (const auto& [a, b] : out)
        check_invariant(a >= 0 && b >= 0, "edge missing from face walks");
    return out;
}

// ════════════════════════════════════════════════════════════════════════
// Triangulation by repeated face chording
// ════════════════════════════════════════════════════════════════════════

Graph triangulate_planar(const Graph& g) {
    check_precondition(g.n >= 3, "triangulation needs at least 3 vertices");
    check_precondition(is_planar(g), "triangulation input must be planar");

    std::vector<std::pair<int, int>> edges = g.edges;
    // Connect components with bridges between their lowest vertices.
    {
        int count = 0;
        std::vector<int> comp = g.components(&count);
        std::vector<int> rep(static_cast<std::size_t>(count), -1);
        for (int v = g.n - 1; v >= 0; --v) rep[comp[v]] = v;
        for (int c = 1; c < count; ++c) edges.emplace_back(rep[c - 1], rep[c]);
    }

    Graph work = Graph::from_edges(g.n, edges);
    const int target = 3 * g.n - 6;
    while (work.m() < target) {
        PlanarEmbedding emb;
        check_invariant(is_planar(work, &emb), "triangulation lost planarity");
        // Chord the first non-triangular face at its first addable pair.
        std::pair<int, int> chord{-1, -1};
        for (const Face& f : faces(work, emb)) {
            if (f.walk.size() < 4) continue;
            std::vector<int> vs = f.vertices();
            for (std::size_t i = 0; i < vs.size() && chord.first < 0; ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (vs[i] != vs[j] && !work.has_edge(vs[i], vs[j])) {
                        chord = {vs[i], vs[j]};
                        break;
                    }
            if (chord.first >= 0) break;
        }
        if (chord.first < 0) {
            // Rare fallback (faces with repeated vertices only): take any
            // non-edge whose insertion keeps the graph planar.
            for (int u = 0; u < work.n && chord.first < 0; ++u)
                for (int v = u + 1; v < work.n; ++v) {
                    if (work.has_edge(u, v)) continue;
                    std::vector<std::pair<int, int>> trial = work.edges;
                    trial.emplace_back(u, v);
                    if (is_planar(Graph::from_edges(work.n, trial))) {
                        chord = {u, v};
                        break;
                    }
                }
        }
        check_invariant(chord.first >= 0, "planar graph below 3n-6 edges has no addable edge");
        std::vector<std::pair<int, int>> next = work.edges;
        next.push_back(chord);
        work = Graph::from_edges(work.n, next);
    }
    return work;
}

// ════════════════════════════════════════════════════════════════════════
// Integer straight-line layout
// ════════════════════════════════════════════════════════════════════════

GridLayout straight_line_layout(const Graph& g) {
    GridLayout out;
    if (g.n == 0) return out;
    if (g.n == 1) {
        out.xy = {{0, 0}};
        return out;
    }
    if (g.n == 2) {
        out.xy = {{0, 0}, {1, 0}};
        return out;
    }
    check_precondition(is_planar(g), "straight-line layout input must be planar");

    Graph tri = triangulate_planar(g);
    BoostGraph b = to_boost(tri);
    std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(tri.n));
    auto emb = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, b));
    check_invariant(boost::boyer_myrvold_planarity_test(
                        boost::boyer_myrvold_params::graph = b,
                        boost::boyer_myrvold_params::embedding = emb),
                    "triangulated graph failed the planarity test");

    using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;
    std::vector<BoostVertex> ordering;
    boost::planar_canonical_ordering(b, emb, std::back_inserter(ordering));
    check_invariant(static_cast<int>(ordering.size()) == tri.n,
                    "canonical ordering missed vertices");

    struct GridPoint {
        std::size_t x = 0, y = 0;
    };
    std::vector<GridPoint> grid(static_cast<std::size_t>(tri.n));
    auto drawing = boost::make_iterator_property_map(grid.begin(),
                                                     boost::get(boost::vertex_index, b));
    boost::chrobak_payne_straight_line_drawing(b, emb, ordering.begin(), ordering.end(),
                                               drawing);

    out.xy.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        out.xy[v] = {static_cast<long long>(grid[v].x), static_cast<long long>(grid[v].y)};
    verify_layout(g, out.xy);
    return out;
}

// ════════════════════════════════════════════════════════════════════════
// Outerplanarity via a universal apex
// ════════════════════════════════════════════════════════════════════════

namespace {

Graph with_apex(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int v = 0; v < g.n; ++v) edges.emplace_back(v, g.n);
    return Graph::from_edges(g.n + 1, edges);
}

} // namespace

bool is_outerplanar(const Graph& g) {
    if (g.n == 0) return true;
    return is_planar(with_apex(g));
}

std::vector<int> outerplanar_circle_order(const Graph& g) {
    if (g.n == 0) return {};
    Graph ap = with_apex(g);
    PlanarEmbedding emb;
    check_precondition(planar_embed(ap, &emb.rotation), "graph is not outerplanar");
    // The apex rotation lists one edge per vertex of g; its cyclic order is a
    // chord-crossing-free circle order (interleaving chords would have to
    // cross the apex star in the planar embedding).
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n));
    for (int e : emb.rotation[g.n]) {
        auto [u, v] = ap.edges[e];
        order.push_back(u == g.n ? v : u);
    }
    check_invariant(static_cast<int>(order.size()) == g.n, "apex rotation missed vertices");
    return order;
}

} // namespace plandec
