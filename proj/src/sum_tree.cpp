#include "plandec/sum_tree.hpp"

#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace plandec {
namespace {

/// Piece under construction: vertices and edges in input ids.  Edges may
/// include virtual join edges that are absent from the input graph.
struct WorkPiece {
    std::vector<int> verts;                    // sorted input ids
    std::vector<std::pair<int, int>> edges;    // canonical input-id pairs
};

struct WorkJoin {
    int a, b;
    std::vector<int> set;
};

Graph local_graph(const WorkPiece& p) {
    std::map<int, int> loc;
    for (int i = 0; i < static_cast<int>(p.verts.size()); ++i) loc[p.verts[i]] = i;
    std::vector<std::pair<int, int>> le;
    le.reserve(p.edges.size());
    for (auto [u, v] : p.edges) le.push_back({loc.at(u), loc.at(v)});
    return Graph::from_edges(static_cast<int>(p.verts.size()), std::move(le), true);
}

/// Growing collection of pieces plus the join tree over them; splitting a
/// piece retargets its joins to the sub-piece that inherits the join set.
struct Forge {
    std::vector<WorkPiece> pieces;
    std::vector<char> alive;
    std::vector<WorkJoin> joins;

    int add(WorkPiece p) {
        pieces.push_back(std::move(p));
        alive.push_back(1);
        return static_cast<int>(pieces.size()) - 1;
    }

    /// Replace piece pi by one sub-piece per part: part_k ∪ S with the piece
    /// edges inside plus every S-pair (the join clique is completed in every
    /// sub-piece).  Sub-pieces are joined to the first in a star on S.
    std::vector<int> split(int pi, std::vector<int> S,
                           const std::vector<std::vector<int>>& parts) {
        const WorkPiece old = pieces[pi];
        alive[pi] = 0;
        std::sort(S.begin(), S.end());
        std::map<int, int> where;
        for (int k = 0; k < static_cast<int>(parts.size()); ++k)
            for (int v : parts[k]) where[v] = k;
        std::vector<std::pair<int, int>> spairs;
        for (size_t i = 0; i < S.size(); ++i)
            for (size_t j = i + 1; j < S.size(); ++j) spairs.push_back({S[i], S[j]});
        std::vector<std::vector<std::pair<int, int>>> pe(parts.size());
        for (auto [u, v] : old.edges) {
            auto iu = where.find(u), iv = where.find(v);
            if (iu == where.end() && iv == where.end()) continue;  // S-pair, re-added below
            int k = iu == where.end() ? iv->second : iu->second;
            check_invariant(iu == where.end() || iv == where.end() || iu->second == iv->second,
                            "separator split leaves no cross-part edges");
            pe[k].push_back({u, v});
        }
        std::vector<int> ids;
        for (int k = 0; k < static_cast<int>(parts.size()); ++k) {
            WorkPiece np;
            np.verts = parts[k];
            np.verts.insert(np.verts.end(), S.begin(), S.end());
            std::sort(np.verts.begin(), np.verts.end());
            np.edges = pe[k];
            np.edges.insert(np.edges.end(), spairs.begin(), spairs.end());
            std::sort(np.edges.begin(), np.edges.end());
            np.edges.erase(std::unique(np.edges.begin(), np.edges.end()), np.edges.end());
            ids.push_back(add(std::move(np)));
        }
        for (size_t k = 1; k < ids.size(); ++k) joins.push_back({ids[0], ids[k], S});
        for (auto& j : joins) {
            for (int* side : {&j.a, &j.b}) {
                if (*side != pi) continue;
                int tgt = ids[0];
                for (int v : j.set) {
                    auto it = where.find(v);
                    if (it != where.end()) {
                        tgt = ids[it->second];
                        break;
                    }
                }
                *side = tgt;
            }
        }
        return ids;
    }
};

/// Biconnected components of L as edge-id groups (iterative lowpoint DFS).
std::vector<std::vector<int>> biconnected_blocks(const Graph& L) {
    std::vector<std::vector<std::pair<int, int>>> inc(L.n);  // (nbr, edge id)
    for (int e = 0; e < L.m(); ++e) {
        auto [u, v] = L.edges[e];
        inc[u].push_back({v, e});
        inc[v].push_back({u, e});
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> disc(L.n, -1), low(L.n, 0);
    std::vector<int> estack;
    int timer = 0;
    struct Frame {
        int v, pe;
        size_t i;
    };
    for (int s = 0; s < L.n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < inc[f.v].size()) {
                auto [w, e] = inc[f.v][f.i++];
                if (e == f.pe) continue;
                if (disc[w] < 0) {
                    estack.push_back(e);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int w = f.v, pe = f.pe;
                st.pop_back();
                if (st.empty()) break;
                int v = st.back().v;
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<int> blk;
                    while (true) {
                        int e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == pe) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            }
        }
    }
    return blocks;
}

/// Articulation vertices of L with `skip` removed (-1 for none), or the
/// special marker {-2} when L - skip is disconnected (skip was a cut vertex).
std::vector<int> articulation_points(const Graph& L, int skip) {
    auto adj = L.adjacency();
    std::vector<int> disc(L.n, -1), low(L.n, 0);
    std::vector<char> art(L.n, 0);
    int timer = 0, roots = 0;
    struct Frame {
        int v, parent;
        size_t i;
        int children = 0;
    };
    for (int s = 0; s < L.n; ++s) {
        if (s == skip || disc[s] >= 0) continue;
        if (++roots > 1) return {-2};
        std::vector<Frame> st{{s, -1, 0, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < adj[f.v].size()) {
                int w = adj[f.v][f.i++];
                if (w == skip || w == f.parent) continue;
                if (disc[w] < 0) {
                    ++f.children;
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.v, 0, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = st.back();
                st.pop_back();
                if (st.empty()) {
                    if (done.children >= 2) art[done.v] = 1;  // root rule
                } else {
                    int v = st.back().v;
                    low[v] = std::min(low[v], low[done.v]);
                    if (st.back().parent != -1 && low[done.v] >= disc[v]) art[v] = 1;
                }
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < L.n; ++v)
        if (v != skip && art[v]) out.push_back(v);
    return out;
}

/// Smallest separation pair of a 2-connected L with n >= 4, or nullopt.
std::optional<std::pair<int, int>> find_2sep(const Graph& L) {
    if (L.n < 4) return std::nullopt;
    for (int u = 0; u < L.n; ++u) {
        auto art = articulation_points(L, u);
        check_invariant(art.empty() || art.front() != -2,
                        "separation-pair search expects a 2-connected piece");
        if (!art.empty()) return std::make_pair(u, art.front());
    }
    return std::nullopt;
}

/// Connected components of L minus the masked vertices, as sorted local ids.
std::vector<std::vector<int>> masked_components(const Graph& L, const std::vector<int>& mask) {
    std::vector<char> skip(L.n, 0);
    for (int v : mask) skip[v] = 1;
    auto adj = L.adjacency();
    std::vector<char> seen(L.n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < L.n; ++s) {
        if (skip[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            comp.push_back(x);
            for (int w : adj[x])
                if (!skip[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Smallest triangle (by ascending vertex triple) whose removal disconnects
/// the 3-connected piece L, or nullopt.
std::optional<std::vector<int>> find_separating_triangle(const Graph& L) {
    if (L.n < 5) return std::nullopt;
    auto adj = L.adjacency();
    for (int u = 0; u < L.n; ++u)
        for (int v : adj[u]) {
            if (v <= u) continue;
            for (int w : adj[u]) {
                if (w <= v || !L.has_edge(v, w)) continue;
                if (masked_components(L, {u, v, w}).size() >= 2)
                    return std::vector<int>{u, v, w};
            }
        }
    return std::nullopt;
}

PieceKind classify(const Graph& piece, bool k5_mode) {
    if (is_planar(piece)) return PieceKind::planar;
    if (k5_mode && is_v8(piece)) return PieceKind::v8;
    if (!k5_mode && piece.n == 5 && piece.m() == 10) return PieceKind::k5;
    return PieceKind::failure;
}

SumTree wagner_decompose(const Graph& g, bool k5_mode) {
    Forge fg;

    // connected components, chained by empty joins
    int nc = 0;
    auto comp = g.components(&nc);
    std::vector<std::vector<int>> cv(nc);
    for (int v = 0; v < g.n; ++v) cv[comp[v]].push_back(v);
    std::vector<std::vector<std::pair<int, int>>> ce(nc);
    for (auto [u, v] : g.edges) ce[comp[u]].push_back({u, v});
    std::vector<int> cid;
    for (int c = 0; c < nc; ++c) cid.push_back(fg.add({cv[c], ce[c]}));
    for (int c = 1; c < nc; ++c) fg.joins.push_back({cid[c - 1], cid[c], {}});

    // blocks at cut vertices
    for (int pi : cid) {
        const WorkPiece old = fg.pieces[pi];
        if (old.verts.size() <= 2) continue;
        Graph L = local_graph(old);
        auto blocks = biconnected_blocks(L);
        if (blocks.size() <= 1) continue;
        fg.alive[pi] = 0;
        std::vector<int> bid;
        std::map<int, std::vector<int>> at;  // input vertex -> block piece ids
        for (auto& blk : blocks) {
            std::set<int> vs;
            WorkPiece np;
            for (int e : blk) {
                auto [u, v] = L.edges[e];
                vs.insert(old.verts[u]);
                vs.insert(old.verts[v]);
                np.edges.push_back({old.verts[u], old.verts[v]});
            }
            np.verts.assign(vs.begin(), vs.end());
            std::sort(np.edges.begin(), np.edges.end());
            int id = fg.add(std::move(np));
            bid.push_back(id);
            for (int v : vs) at[v].push_back(id);
        }
        for (auto& [v, ids] : at)
            for (size_t k = 1; k < ids.size(); ++k) fg.joins.push_back({ids[0], ids[k], {v}});
        for (auto& j : fg.joins) {
            for (int* side : {&j.a, &j.b}) {
                if (*side != pi) continue;
                int tgt = bid.front();
                for (int id : bid) {
                    const auto& vs = fg.pieces[id].verts;
                    if (std::includes(vs.begin(), vs.end(), j.set.begin(), j.set.end())) {
                        tgt = id;
                        break;
                    }
                }
                *side = tgt;
            }
        }
    }

    // separation pairs, then (K5 mode) separating triangles
    std::queue<int> work;
    for (int pi = 0; pi < static_cast<int>(fg.pieces.size()); ++pi)
        if (fg.alive[pi]) work.push(pi);
    while (!work.empty()) {
        int pi = work.front();
        work.pop();
        if (!fg.alive[pi]) continue;
        Graph L = local_graph(fg.pieces[pi]);
        std::vector<int> cut;
        if (auto sep = find_2sep(L)) {
            cut = {sep->first, sep->second};
        } else if (k5_mode) {
            if (auto tri = find_separating_triangle(L)) cut = *tri;
        }
        if (cut.empty()) continue;
        const auto& verts = fg.pieces[pi].verts;
        std::vector<int> S;
        for (int v : cut) S.push_back(verts[v]);
        std::vector<std::vector<int>> parts;
        for (auto& comp_local : masked_components(L, cut)) {
            std::vector<int> part;
            for (int v : comp_local) part.push_back(verts[v]);
            parts.push_back(std::move(part));
        }
        check_invariant(parts.size() >= 2, "separator yields at least two parts");
        for (int id : fg.split(pi, S, parts)) work.push(id);
    }

    // pack alive pieces
    SumTree out;
    out.n = g.n;
    std::vector<int> packed(fg.pieces.size(), -1);
    for (int pi = 0; pi < static_cast<int>(fg.pieces.size()); ++pi) {
        if (!fg.alive[pi]) continue;
        packed[pi] = static_cast<int>(out.pieces.size());
        SumPiece sp;
        sp.graph = local_graph(fg.pieces[pi]);
        sp.to_g = fg.pieces[pi].verts;
        sp.kind = classify(sp.graph, k5_mode);
        out.pieces.push_back(std::move(sp));
    }
    for (auto& j : fg.joins) {
        check_invariant(packed[j.a] >= 0 && packed[j.b] >= 0, "joins reference live pieces");
        SumJoin sj;
        sj.a = packed[j.a];
        sj.b = packed[j.b];
        sj.set = j.set;
        for (size_t i = 0; i < j.set.size(); ++i)
            for (size_t k = i + 1; k < j.set.size(); ++k) {
                int x = std::min(j.set[i], j.set[k]), y = std::max(j.set[i], j.set[k]);
                if (!g.has_edge(x, y)) sj.deleted.push_back({x, y});
            }
        out.joins.push_back(std::move(sj));
    }
    check_invariant(out.joins.size() + 1 == out.pieces.size() || out.pieces.empty(),
                    "joins form a tree over the pieces");
    return out;
}

}  // namespace

std::string piece_kind_name(PieceKind k) {
    switch (k) {
        case PieceKind::planar: return "planar";
        case PieceKind::v8: return "v8";
        case PieceKind::k5: return "k5";
        default: return "failure";
    }
}

Graph SumTree::compose() const {
    std::set<std::pair<int, int>> es;
    for (const auto& p : pieces)
        for (auto [u, v] : p.graph.edges) {
            int x = p.to_g[u], y = p.to_g[v];
            es.insert({std::min(x, y), std::max(x, y)});
        }
    for (const auto& j : joins)
        for (auto d : j.deleted) es.erase(d);
    return Graph::from_edges(n, {es.begin(), es.end()});
}

bool SumTree::has_failure() const { return failure_piece() >= 0; }

int SumTree::failure_piece() const {
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
        if (pieces[i].kind == PieceKind::failure) return i;
    return -1;
}

std::vector<std::pair<int, int>> sum_tree_walk(const SumTree& t, int root) {
    const int np = static_cast<int>(t.pieces.size());
    check_precondition(root >= 0 && root < np, "walk root is not a piece index");
    std::vector<std::vector<int>> at(np);
    for (int j = 0; j < static_cast<int>(t.joins.size()); ++j) {
        at[t.joins[j].a].push_back(j);
        at[t.joins[j].b].push_back(j);
    }
    std::vector<char> seen(np, 0);
    std::vector<std::pair<int, int>> out;
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int p = q.front();
        q.pop();
        for (int j : at[p]) {
            int o = t.joins[j].a == p ? t.joins[j].b : t.joins[j].a;
            if (seen[o]) continue;
            seen[o] = 1;
            out.emplace_back(j, o);
            q.push(o);
        }
    }
    check_invariant(static_cast<int>(out.size()) + 1 == np,
                    "clique-sum tree walk must reach every piece");
    return out;
}

SumTree wagner_k5_decompose(const Graph& g) { return wagner_decompose(g, true); }

SumTree wagner_k33_decompose(const Graph& g) { return wagner_decompose(g, false); }

Graph maximal_k5_completion(const Graph& g) {
    if (g.n <= 2) {
        std::vector<std::pair<int, int>> e;
        if (g.n == 2) e.push_back({0, 1});
        return Graph::from_edges(g.n, std::move(e));
    }

    // connect components first so every join below is a shared vertex set
    Graph gc = g;
    {
        int nc = 0;
        auto comp = g.components(&nc);
        if (nc > 1) {
            std::vector<int> first(nc, -1);
            for (int v = g.n - 1; v >= 0; --v) first[comp[v]] = v;
            auto es = g.edges;
            for (int c = 1; c < nc; ++c) es.push_back({first[c - 1], first[c]});
            gc = Graph::from_edges(g.n, std::move(es), true);
        }
    }

    SumTree t = wagner_k5_decompose(gc);
    if (t.has_failure()) {
        int fp = t.failure_piece();
        throw precondition_error("completion: piece " + std::to_string(fp) + " with " +
                                 std::to_string(t.pieces[fp].graph.n) +
                                 " vertices is neither planar nor the Moebius ladder");
    }

    struct MP {
        std::set<int> verts;
        std::set<std::pair<int, int>> edges;
        bool v8;
    };
    std::vector<MP> ps;
    for (const auto& p : t.pieces) {
        MP m;
        m.v8 = p.kind == PieceKind::v8;
        m.verts.insert(p.to_g.begin(), p.to_g.end());
        for (auto [u, v] : p.graph.edges) {
            int x = p.to_g[u], y = p.to_g[v];
            m.edges.insert({std::min(x, y), std::max(x, y)});
        }
        ps.push_back(std::move(m));
    }
    struct MJ {
        int a, b;
        std::vector<int> set;
    };
    std::vector<MJ> js;
    for (const auto& j : t.joins) js.push_back({j.a, j.b, j.set});

    auto smallest_nbr = [&](const MP& p, int v) {
        int best = -1;
        for (auto [x, y] : p.edges) {
            int other = x == v ? y : (y == v ? x : -1);
            if (other >= 0 && (best < 0 || other < best)) best = other;
        }
        check_invariant(best >= 0, "join vertex has a neighbor inside its piece");
        return best;
    };

    // 1-joins -> two 2-joins through an inserted triangle piece
    for (size_t ji = 0; ji < js.size(); ++ji) {
        if (js[ji].set.size() != 1) continue;
        int v = js[ji].set[0];
        int u = smallest_nbr(ps[js[ji].a], v);
        int w = smallest_nbr(ps[js[ji].b], v);
        check_invariant(u != w, "adjacent pieces share only the join set");
        MP tri;
        tri.v8 = false;
        tri.verts = {u, v, w};
        tri.edges = {{std::min(u, v), std::max(u, v)},
                     {std::min(v, w), std::max(v, w)},
                     {std::min(u, w), std::max(u, w)}};
        int ti = static_cast<int>(ps.size());
        ps.push_back(std::move(tri));
        int old_b = js[ji].b;
        js[ji].b = ti;
        js[ji].set = {std::min(u, v), std::max(u, v)};
        js.push_back({ti, old_b, {std::min(v, w), std::max(v, w)}});
    }

    auto triangulate_piece = [&](MP& p) {
        if (p.verts.size() < 3 || p.v8) return;
        std::vector<int> vs(p.verts.begin(), p.verts.end());
        std::map<int, int> loc;
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) loc[vs[i]] = i;
        std::vector<std::pair<int, int>> le;
        for (auto [x, y] : p.edges) le.push_back({loc.at(x), loc.at(y)});
        Graph T = triangulate_planar(Graph::from_edges(static_cast<int>(vs.size()), le, true));
        for (auto [x, y] : T.edges)
            p.edges.insert({std::min(vs[x], vs[y]), std::max(vs[x], vs[y])});
    };
    for (auto& p : ps) triangulate_piece(p);

    // 2-joins between planar pieces -> 3-joins: a common neighbor of the join
    // edge in the donor side is shared with the receiver
    for (auto& j : js) {
        if (j.set.size() != 2) continue;
        if (ps[j.a].v8 || ps[j.b].v8) {
            check_invariant(ps[j.a].edges.count({j.set[0], j.set[1]}) &&
                                ps[j.b].edges.count({j.set[0], j.set[1]}),
                            "a join at a Moebius-ladder piece is one of its edges");
            continue;
        }
        int u = j.set[0], v = j.set[1];
        auto common = [&](const MP& p) {
            int best = -1;
            for (int x : p.verts) {
                if (x == u || x == v) continue;
                if (p.edges.count({std::min(x, u), std::max(x, u)}) &&
                    p.edges.count({std::min(x, v), std::max(x, v)})) {
                    if (best < 0 || x < best) best = x;
                }
            }
            return best;
        };
        int w = common(ps[j.a]);
        int recv = j.b;
        if (w < 0) {
            w = common(ps[j.b]);
            recv = j.a;
        }
        check_invariant(w >= 0, "triangulated donor has a triangle over the join edge");
        ps[recv].verts.insert(w);
        ps[recv].edges.insert({std::min(w, u), std::max(w, u)});
        ps[recv].edges.insert({std::min(w, v), std::max(w, v)});
        j.set = {u, v, w};
        std::sort(j.set.begin(), j.set.end());
    }

    // receivers gained degree-2 vertices: triangulate once more and union
    for (auto& p : ps) triangulate_piece(p);
    std::vector<std::pair<int, int>> all;
    for (const auto& p : ps) all.insert(all.end(), p.edges.begin(), p.edges.end());
    return Graph::from_edges(g.n, std::move(all), true);
}

}  // namespace plandec
