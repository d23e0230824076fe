#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plandec/errors.hpp"
#include "plandec/k33.hpp"
#include "plandec/k5.hpp"
#include "plandec/minors.hpp"
#include "plandec/planarity.hpp"
#include "plandec/sum_tree.hpp"

#include "oracles.hpp"

#include <map>
#include <random>
#include <set>

using namespace plandec;

namespace {

Graph octahedron() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                 {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// three octahedra glued on one shared triangle: 3-connected, K5-minor-free,
// and nonplanar (two copies can flank the triangle, the third cannot embed)
Graph triple_octahedron() {
    Graph g = octahedron();
    // {0,1,2} is a triangle of the octahedron above
    g = testkit::glue(g, octahedron(), {0, 1, 2});
    g = testkit::glue(g, octahedron(), {0, 1, 2});
    return g;
}

void check_leaf_kinds(const SumTree& t) {
    for (const auto& piece : t.pieces) {
        switch (piece.kind) {
            case PieceKind::planar: CHECK(is_planar(piece.graph)); break;
            case PieceKind::v8: CHECK(is_v8(piece.graph)); break;
            case PieceKind::k5: CHECK(piece.graph == complete_graph(5)); break;
            case PieceKind::failure: CHECK(false); break;
        }
    }
}

}  // namespace

TEST_CASE("sum tree of classic inputs") {
    std::mt19937 rng(70);
    SumTree planar = wagner_k5_decompose(testkit::random_triangulation(12, rng));
    CHECK(!planar.has_failure());

    SumTree lad = wagner_k5_decompose(v8_graph());
    CHECK(!lad.has_failure());
    REQUIRE(lad.pieces.size() == 1);
    CHECK(lad.pieces[0].kind == PieceKind::v8);

    // K5 is not K5-minor-free: the offending piece is reported, not hidden
    SumTree bad = wagner_k5_decompose(complete_graph(5));
    CHECK(bad.has_failure());
    CHECK(bad.failure_piece() >= 0);
    CHECK(bad.pieces[bad.failure_piece()].kind == PieceKind::failure);
    CHECK(wagner_k5_decompose(complete_graph(6)).has_failure());

    // K5 is fine in the K33 direction; K33 is not
    SumTree k5ok = wagner_k33_decompose(complete_graph(5));
    CHECK(!k5ok.has_failure());
    REQUIRE(k5ok.pieces.size() == 1);
    CHECK(k5ok.pieces[0].kind == PieceKind::k5);
    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK(wagner_k33_decompose(k33).has_failure());

    // empty and tiny graphs
    CHECK(wagner_k5_decompose(Graph(0)).compose() == Graph(0));
    CHECK(wagner_k5_decompose(Graph(3)).compose() == Graph(3));
}

TEST_CASE("two tetrahedra sharing a triangle split at it") {
    Graph g = testkit::glue(complete_graph(4), complete_graph(4), {0, 1, 2});
    SumTree t = wagner_k5_decompose(g);
    CHECK(!t.has_failure());
    REQUIRE(t.pieces.size() == 2);
    REQUIRE(t.joins.size() == 1);
    CHECK(t.joins[0].set == std::vector<int>{0, 1, 2});
    CHECK(t.joins[0].deleted.empty());
    CHECK(t.compose() == g);
}

TEST_CASE("nonplanar 3-connected cluster splits at a separating triangle") {
    Graph g = triple_octahedron();
    REQUIRE(!is_planar(g));
    REQUIRE(!has_k5_minor_small(g));
    SumTree t = wagner_k5_decompose(g);
    CHECK(!t.has_failure());
    check_leaf_kinds(t);
    CHECK(t.compose() == g);
    CHECK(t.pieces.size() >= 3);
}

TEST_CASE("round trips on generated minor-free inputs") {
    std::mt19937 rng(71);
    for (int t = 0; t < 14; ++t) {
        Graph g = testkit::random_k5_free(25 + static_cast<int>(rng() % 30), rng);
        SumTree st = wagner_k5_decompose(g);
        CHECK(!st.has_failure());
        check_leaf_kinds(st);
        CHECK(st.compose() == g);
    }
    for (int t = 0; t < 14; ++t) {
        Graph g = testkit::random_k33_free(20 + static_cast<int>(rng() % 25), rng);
        SumTree st = wagner_k33_decompose(g);
        CHECK(!st.has_failure());
        check_leaf_kinds(st);
        CHECK(st.compose() == g);
        for (const auto& j : st.joins) CHECK(j.set.size() <= 2);
    }
}

TEST_CASE("walk visits every piece exactly once from any root") {
    std::mt19937 rng(72);
    Graph g = testkit::random_k5_free(45, rng);
    SumTree t = wagner_k5_decompose(g);
    REQUIRE(!t.has_failure());
    for (int root = 0; root < static_cast<int>(t.pieces.size()); ++root) {
        auto walk = sum_tree_walk(t, root);
        CHECK(walk.size() + 1 == t.pieces.size());
        std::set<int> seen = {root};
        for (auto [j, fresh] : walk) {
            REQUIRE(j >= 0);
            REQUIRE(j < static_cast<int>(t.joins.size()));
            CHECK(!seen.count(fresh));
            // the join must connect the fresh piece to an already-seen one
            bool touches_old = seen.count(t.joins[j].a) || seen.count(t.joins[j].b);
            bool touches_new = t.joins[j].a == fresh || t.joins[j].b == fresh;
            CHECK(touches_old);
            CHECK(touches_new);
            seen.insert(fresh);
        }
    }
    CHECK_THROWS_AS(sum_tree_walk(t, -1), precondition_error);
}

TEST_CASE("edge-maximal completion") {
    std::mt19937 rng(73);
    for (int t = 0; t < 8; ++t) {
        Graph g = testkit::random_k5_free(16, rng);
        Graph c = maximal_k5_completion(g);
        CHECK(c.n == g.n);
        for (auto [u, v] : g.edges) CHECK(c.has_edge(u, v));
        if (c.n <= 20) {
            CHECK(!has_k5_minor_small(c));
            // adding any absent edge creates a K5 minor (spot check a few)
            int tried = 0;
            for (int u = 0; u < c.n && tried < 4; ++u)
                for (int v = u + 1; v < c.n && tried < 4; ++v) {
                    if (c.has_edge(u, v)) continue;
                    auto e = c.edges;
                    e.push_back({u, v});
                    CHECK(has_k5_minor_small(Graph::from_edges(c.n, e)));
                    ++tried;
                }
        }
    }
    CHECK_THROWS_AS(maximal_k5_completion(complete_graph(5)), precondition_error);
}

TEST_CASE("planar four-colouring is proper") {
    std::mt19937 rng(74);
    for (int t = 0; t < 12; ++t) {
        Graph g = t % 2 == 0 ? testkit::random_triangulation(6 + static_cast<int>(rng() % 40), rng)
                             : testkit::random_planar(5 + static_cast<int>(rng() % 30), rng);
        auto col = four_colour_planar(g);
        REQUIRE(static_cast<int>(col.size()) == g.n);
        for (int v = 0; v < g.n; ++v) {
            CHECK(col[v] >= 0);
            CHECK(col[v] < 4);
        }
        for (auto [u, v] : g.edges) CHECK(col[u] != col[v]);
    }
    CHECK_THROWS_AS(four_colour_planar(complete_graph(5)), precondition_error);
}

TEST_CASE("edge tripartition properties") {
    std::mt19937 rng(75);
    for (int t = 0; t < 10; ++t) {
        Graph g = t % 3 == 2 ? maximal_k5_completion(testkit::random_k5_free(20, rng))
                             : testkit::random_triangulation(5 + static_cast<int>(rng() % 16), rng);
        EdgeTripartition tp = edge_partition_k5(g);

        // classes partition the edge set
        std::size_t total = 0;
        std::set<std::pair<int, int>> seen;
        for (int j = 0; j < 3; ++j) {
            total += tp.cls[j].size();
            for (auto e : tp.cls[j]) {
                CHECK(g.has_edge(e.first, e.second));
                CHECK(!seen.count(e));
                seen.insert(e);
            }
        }
        CHECK(total == static_cast<std::size_t>(g.m()));

        // every triangle has one edge of each class
        std::map<std::pair<int, int>, int> cls_of;
        for (int j = 0; j < 3; ++j)
            for (auto e : tp.cls[j]) cls_of[e] = j;
        auto adj = g.adjacency();
        for (auto [u, v] : g.edges)
            for (int w : adj[u]) {
                if (w <= v || !g.has_edge(v, w)) continue;
                std::set<int> cs = {cls_of[{u, v}], cls_of[{std::min(u, w), std::max(u, w)}],
                                    cls_of[{std::min(v, w), std::max(v, w)}]};
                CHECK(cs == std::set<int>{0, 1, 2});
            }

        // every pure triangulation gives n-2 edges per class
        if (is_planar(g) && g.m() == 3 * g.n - 6)
            for (int j = 0; j < 3; ++j)
                CHECK(static_cast<int>(tp.cls[j].size()) == g.n - 2);

        // missed sets are honest and pairwise disjoint; the best one is small
        std::size_t best = g.n;
        for (int j = 0; j < 3; ++j) {
            std::set<int> touched;
            for (auto [u, v] : tp.cls[j]) {
                touched.insert(u);
                touched.insert(v);
            }
            for (int v : tp.missed[j]) CHECK(!touched.count(v));
            CHECK(tp.missed[j].size() + touched.size() == static_cast<std::size_t>(g.n));
            best = std::min(best, tp.missed[j].size());
        }
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k)
                for (int v : tp.missed[j])
                    CHECK(std::find(tp.missed[k].begin(), tp.missed[k].end(), v) ==
                          tp.missed[k].end());
        CHECK(3 * static_cast<int>(best) <= g.n);
    }
    CHECK_THROWS_AS(edge_partition_k5(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
                    precondition_error);  // not edge-maximal
}

TEST_CASE("ladder tripartition splits into the three matchings") {
    EdgeTripartition tp = edge_partition_k5(v8_graph());
    for (int j = 0; j < 3; ++j) {
        CHECK(tp.cls[j].size() == 4);
        CHECK(tp.missed[j].empty());
        std::set<int> ends;
        for (auto [u, v] : tp.cls[j]) {
            CHECK(!ends.count(u));
            CHECK(!ends.count(v));
            ends.insert(u);
            ends.insert(v);
        }
    }
}

TEST_CASE("bag-per-edge omega decomposition from a class") {
    std::mt19937 rng(76);
    for (int t = 0; t < 8; ++t) {
        Graph g = testkit::random_triangulation(5 + static_cast<int>(rng() % 14), rng);
        EdgeTripartition tp = edge_partition_k5(g);
        Decomposition d = omega_decomp_from_E(g, tp.cls[0]);
        CHECK(d.width() <= 2);
        CHECK(d.p == clique_number(g));
        CHECK(d.order() == static_cast<int>(tp.cls[0].size() + tp.missed[0].size()));
        CHECK(validate_decomposition(g, d).empty());
        CHECK(testkit::oracle_decomposition_valid(g, d, true));
    }
}

TEST_CASE("width-2 pipeline for K5-minor-free graphs") {
    std::mt19937 rng(77);
    for (int t = 0; t < 10; ++t) {
        Graph g = testkit::random_k5_free(12 + static_cast<int>(rng() % 40), rng);
        Decomposition d = planar_omega_decomp_k5(g);
        CHECK(d.width() <= 2);
        CHECK(d.p == clique_number(g));
        CHECK(validate_decomposition(g, d).empty());

        int doubletons = 0, singletons = 0;
        for (const auto& bag : d.bags)
            (bag.size() == 2 ? doubletons : singletons)++;
        CHECK(doubletons <= g.n - 2);
        CHECK(3 * singletons <= g.n);
        CHECK(3 * d.order() <= 4 * g.n - 6);
    }
    // the ladder fixture: width 2, order 7, host a chorded 4-cycle
    Decomposition v8d = v8_omega_decomposition();
    CHECK(v8d.order() == 7);
    CHECK(v8d.width() == 2);
    CHECK(validate_decomposition(v8_graph(), v8d).empty());
}

TEST_CASE("certified crossing drawing for K5-minor-free graphs") {
    std::mt19937 rng(78);
    for (int t = 0; t < 6; ++t) {
        Graph g = testkit::random_k5_free(12 + static_cast<int>(rng() % 30), rng);
        RenderResult r = crossings_k5(g, 500 + t);
        CHECK(r.drawing.g == g);
        auto rep = count_crossings(r.drawing);
        CHECK(rep.proper());
        CHECK(rep.total == r.crossings);
        long long delta = g.max_degree();
        CHECK(3 * r.crossings < 20 * delta * delta * g.n);
    }
    CHECK_THROWS_AS(crossings_k5(complete_graph(5)), precondition_error);
}

TEST_CASE("strong 3-decomposition via face duals") {
    // Apollonian stacks meet the order cap with equality: n-3 tetrahedra
    // contribute 4 bags each, and every one of the n-4 joins contracts a pair
    std::mt19937 rng(79);
    for (int n : {4, 6, 9, 15, 25}) {
        Graph g = testkit::random_triangulation(n, rng);
        Decomposition d = strong_3_decomp_k5(g);
        CHECK(d.strong);
        CHECK(d.p == 3);
        CHECK(d.width() <= 3);
        CHECK(d.order() == 3 * n - 8);
        CHECK(validate_decomposition(g, d).empty());
    }
    // one bag per face for a single 3-connected triangulation piece
    Decomposition od = strong_3_decomp_k5(octahedron());
    CHECK(od.order() == 8);
    CHECK(validate_decomposition(octahedron(), od).empty());

    std::mt19937 rng2(80);
    for (int t = 0; t < 6; ++t) {
        Graph g = testkit::random_k5_free(12 + static_cast<int>(rng2() % 30), rng2);
        if (g.n < 4) continue;
        Decomposition d = strong_3_decomp_k5(g);
        CHECK(d.order() <= 3 * g.n - 8);
        CHECK(d.width() <= 3);
        CHECK(validate_decomposition(g, d).empty());
        CHECK(testkit::oracle_decomposition_valid(g, d, true));
    }
}

TEST_CASE("strong clique-covering decomposition of width 4") {
    Decomposition v8d = strong_omega_decomp_k5(v8_graph());
    CHECK(v8d.order() == 4);
    CHECK(v8d.width() == 4);
    CHECK(v8d.strong);
    CHECK(v8d.p == 4);
    CHECK(validate_decomposition(v8_graph(), v8d).empty());

    std::mt19937 rng(81);
    for (int t = 0; t < 8; ++t) {
        Graph g = t % 2 == 0 ? testkit::random_triangulation(4 + static_cast<int>(rng() % 20), rng)
                             : testkit::random_k5_free(10 + static_cast<int>(rng() % 25), rng);
        if (g.n < 4) continue;
        Decomposition d = strong_omega_decomp_k5(g);
        CHECK(d.strong);
        CHECK(d.width() <= 4);
        CHECK(3 * d.order() <= 4 * g.n - 12);
        CHECK(validate_decomposition(g, d).empty());
    }
}

TEST_CASE("planarizing matchings for K33-minor-free graphs") {
    // planar input: nothing to contract
    std::mt19937 rng(82);
    Graph pl = testkit::random_planar(14, rng);
    CHECK(k33_planarizing_matching(pl, pl.edges.front()).empty());

    // K5 needs exactly one contraction, chosen away from the kept edge
    auto m = k33_planarizing_matching(complete_graph(5), {0, 1});
    REQUIRE(m.size() == 1);
    CHECK(m[0].first != 0);
    CHECK(m[0].first != 1);
    CHECK(m[0].second != 0);
    CHECK(m[0].second != 1);

    for (int t = 0; t < 12; ++t) {
        Graph g = testkit::random_k33_free(14 + static_cast<int>(rng() % 40), rng);
        auto keep = g.edges[rng() % g.edges.size()];
        auto match = k33_planarizing_matching(g, keep);

        std::set<int> ends = {keep.first, keep.second};
        for (auto [u, v] : match) {
            CHECK(g.has_edge(u, v));
            CHECK(!ends.count(u));
            CHECK(!ends.count(v));
            ends.insert(u);
            ends.insert(v);
        }
        if (!match.empty()) CHECK(3 * static_cast<int>(match.size()) <= g.n - 2);
        CHECK(is_planar(g.contract_pairs(match)));
    }
}

TEST_CASE("planarizing matching rejects bad inputs") {
    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK_THROWS_AS(k33_planarizing_matching(k33, {0, 3}), precondition_error);
    CHECK_THROWS_AS(k33_planarizing_matching(complete_graph(5), {0, 0}), precondition_error);
    Graph pl(3);
    CHECK_THROWS_AS(k33_planarizing_matching(pl, {0, 1}), precondition_error);
}

TEST_CASE("matching survives chains of K5 pieces") {
    // a path of K5 blocks 2-summed edge to edge: one contraction per block
    std::mt19937 rng(83);
    Graph g = complete_graph(5);
    int blocks = 5;
    for (int b = 1; b < blocks; ++b) {
        auto [u, v] = g.edges[rng() % g.edges.size()];
        g = testkit::glue(g, complete_graph(5), {u, v});
    }
    auto keep = g.edges.front();
    auto m = k33_planarizing_matching(g, keep);
    CHECK(static_cast<int>(m.size()) == blocks);
    CHECK(3 * static_cast<int>(m.size()) <= g.n - 2);
    CHECK(is_planar(g.contract_pairs(m)));

    // blocks meeting at one cut vertex (the shared vertex may serve only one)
    Graph star = complete_graph(5);
    for (int b = 0; b < 3; ++b) star = testkit::glue(star, complete_graph(5), {0});
    auto sm = k33_planarizing_matching(star, star.edges.front());
    CHECK(sm.size() == 4);
    std::set<int> ends;
    for (auto [u, v] : sm) {
        CHECK(!ends.count(u));
        CHECK(!ends.count(v));
        ends.insert(u);
        ends.insert(v);
    }
    CHECK(is_planar(star.contract_pairs(sm)));
}

TEST_CASE("matching survives deleted-join sums") {
    // 2-sum two K5s on an edge, then delete the join edge: the summands are
    // K5s in the abstract tree, but the join pair is not an edge of g
    Graph g = testkit::glue(complete_graph(5), complete_graph(5), {0, 1});
    auto e = g.edges;
    std::erase(e, std::pair<int, int>{0, 1});
    Graph del = Graph::from_edges(g.n, e);
    REQUIRE(!has_k33_minor_small(del));
    auto m = k33_planarizing_matching(del, del.edges.front());
    for (auto [u, v] : m) CHECK(del.has_edge(u, v));
    CHECK(is_planar(del.contract_pairs(m)));
    CHECK(3 * static_cast<int>(m.size()) <= del.n - 2);
}

TEST_CASE("width-2 partition and rectilinear drawing for K33-minor-free graphs") {
    std::mt19937 rng(84);
    for (int t = 0; t < 8; ++t) {
        Graph g = testkit::random_k33_free(12 + static_cast<int>(rng() % 35), rng);
        Partition p = k33_planar_partition(g);
        CHECK(p.host == g);
        CHECK(p.width() <= 2);
        CHECK(is_planar(p.pattern));
        CHECK(validate_partition(p).empty());
        int pairs = 0;
        for (const auto& bag : p.bags)
            if (bag.size() == 2) ++pairs;
        CHECK(3 * pairs <= g.n - 2);

        PartitionDrawing pd = k33_rectilinear_drawing(g, 700 + t);
        CHECK(pd.drawing.g == g);
        for (const auto& b : pd.drawing.bends) CHECK(b.empty());
        auto rep = count_crossings(pd.drawing);
        CHECK(rep.proper());
        CHECK(rep.total == pd.report.total);
        long long delta = g.max_degree();
        for (int e = 0; e < g.m(); ++e) CHECK(rep.per_edge[e] <= 2 * delta);
        CHECK(rep.total <= delta * std::max(3 * g.n - 5, 0));
    }
}
