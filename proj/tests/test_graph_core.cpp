#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plandec/errors.hpp"
#include "plandec/geometry.hpp"
#include "plandec/graph.hpp"
#include "plandec/matching.hpp"
#include "plandec/minors.hpp"
#include "plandec/planarity.hpp"
#include "plandec/treewidth.hpp"

#include "oracles.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

using namespace plandec;

namespace {

Graph grid(int r, int c) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c) e.push_back({i * c + j, i * c + j + 1});
            if (i + 1 < r) e.push_back({i * c + j, (i + 1) * c + j});
        }
    return Graph::from_edges(r * c, e);
}

Graph petersen() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                  {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

Graph octahedron() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                 {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

Pt pt(long long x, long long y) { return Pt{rat(x), rat(y)}; }

}  // namespace

TEST_CASE("edge storage is canonical") {
    Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 2}, {3, 0}}, true);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.edge_id(3, 0) == 0);
    CHECK(g.edge_id(1, 3) == -1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), precondition_error);
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}}, true).m() == 1);
}

TEST_CASE("edge list text round trip") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 4}, {2, 3}});
    std::string text = write_edge_list(g);
    std::istringstream in(text);
    CHECK(read_edge_list(in) == g);

    auto bad = [](const std::string& s) {
        std::istringstream is(s);
        CHECK_THROWS_AS(read_edge_list(is), parse_error);
    };
    bad("");
    bad("2");
    bad("2 1\n0 2\n");       // endpoint out of range
    bad("2 2\n0 1\n");       // fewer edges than promised
    bad("3 1\n1 1\n");       // self-loop
    bad("3 2\n0 1\n1 0\n");  // parallel
}

TEST_CASE("components, induced subgraph, contraction") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
    int count = 0;
    auto comp = g.components(&count);
    CHECK(count == 3);
    CHECK(comp[0] == comp[2]);
    CHECK(comp[3] == comp[4]);
    CHECK(comp[5] != comp[0]);
    CHECK(!g.connected());

    Graph sub = g.induced({1, 2, 4});
    CHECK(sub.n == 3);
    CHECK(sub.edges == std::vector<std::pair<int, int>>{{0, 1}});

    // contracting the four antipodal chords of the Moebius ladder leaves the
    // 4-cycle of the rim pairs
    Graph c4 = v8_graph().contract_pairs({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(c4 == Graph::from_edges(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));

    // contracting one edge of K5 gives K4
    CHECK(complete_graph(5).contract_pairs({{0, 1}}) == complete_graph(4));
}

TEST_CASE("degeneracy order and clique enumeration") {
    Graph tree = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(degeneracy_order(tree).d == 1);
    CHECK(degeneracy_order(complete_graph(5)).d == 4);

    // 4-regular, so the first removal already sees degree 4
    auto ord = degeneracy_order(octahedron());
    CHECK(ord.d == 4);
    auto innb = degeneracy_in_neighbors(octahedron(), ord);
    for (int v = 0; v < 6; ++v) {
        CHECK(static_cast<int>(innb[v].size()) <= ord.d);
        for (int u : innb[v]) CHECK(ord.pos[u] > ord.pos[v]);
    }

    auto cl = enumerate_cliques(complete_graph(4), 3);
    CHECK(cl.size() == 4 + 6 + 4);  // vertices + edges + triangles
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(octahedron()) == 3);
    CHECK(clique_number(petersen()) == 2);
    CHECK(clique_number(Graph(3)) == 1);
}

TEST_CASE("moebius ladder recognition") {
    CHECK(is_v8(v8_graph()));

    // a scrambled relabeling is still recognized, and the map is a real
    // isomorphism onto the cycle-plus-chords roles
    std::vector<int> relabel = {3, 6, 0, 5, 1, 7, 4, 2};
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : v8_graph().edges) e.push_back({relabel[u], relabel[v]});
    Graph g = Graph::from_edges(8, e);
    std::vector<int> map;
    REQUIRE(is_v8(g, &map));
    Graph target = v8_graph();
    for (auto [u, v] : target.edges) CHECK(g.has_edge(map[u], map[v]));

    Graph c8 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                     {6, 7}, {0, 7}});
    CHECK(!is_v8(c8));
    auto plus = v8_graph().edges;
    plus.push_back({0, 2});
    CHECK(!is_v8(Graph::from_edges(8, plus)));
    CHECK(!is_v8(complete_graph(8)));
}

TEST_CASE("planarity of classic graphs") {
    CHECK(is_planar(grid(4, 5)));
    CHECK(is_planar(octahedron()));
    CHECK(is_planar(complete_graph(4)));
    CHECK(!is_planar(complete_graph(5)));
    CHECK(!is_planar(petersen()));
    CHECK(!is_planar(v8_graph()));
    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK(!is_planar(k33));
}

TEST_CASE("embedding faces satisfy Euler's formula") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        Graph g = testkit::random_planar(3 + static_cast<int>(rng() % 20), rng);
        PlanarEmbedding emb;
        REQUIRE(is_planar(g, &emb));
        auto fs = faces(g, emb);
        int comps = 0;
        g.components(&comps);
        CHECK(static_cast<int>(fs.size()) == 1 + g.m() - g.n + 2 * comps - 1);

        // every directed half-edge appears in exactly one face walk
        std::size_t walk_total = 0;
        for (const auto& f : fs) walk_total += f.walk.size();
        CHECK(walk_total == 2 * static_cast<std::size_t>(g.m()));

        auto ef = edge_faces(g, emb);
        REQUIRE(static_cast<int>(ef.size()) == g.m());
        std::vector<long long> sides(fs.size(), 0);
        for (auto [a, b] : ef) {
            ++sides[a];
            ++sides[b];
        }
        for (std::size_t f = 0; f < fs.size(); ++f)
            CHECK(sides[f] == static_cast<long long>(fs[f].walk.size()));
    }
}

TEST_CASE("triangulating a planar graph") {
    std::mt19937 rng(32);
    for (int t = 0; t < 10; ++t) {
        Graph g = testkit::random_planar(4 + static_cast<int>(rng() % 16), rng, 50);
        Graph tg = triangulate_planar(g);
        CHECK(tg.n == g.n);
        CHECK(tg.m() == 3 * tg.n - 6);
        CHECK(is_planar(tg));
        for (auto [u, v] : g.edges) CHECK(tg.has_edge(u, v));
    }
    CHECK_THROWS_AS(triangulate_planar(complete_graph(5)), precondition_error);
}

TEST_CASE("straight-line layout is exact and crossing-free") {
    std::mt19937 rng(33);
    for (int t = 0; t < 10; ++t) {
        Graph g = testkit::random_planar(3 + static_cast<int>(rng() % 18), rng);
        GridLayout lay = straight_line_layout(g);
        REQUIRE(static_cast<int>(lay.xy.size()) == g.n);
        std::vector<Pt> pts;
        for (auto [x, y] : lay.xy) pts.push_back(pt(x, y));
        auto rep = count_crossings(Drawing::straight_line(g, pts));
        CHECK(rep.proper());
        CHECK(rep.total == 0);
        if (g.connected())
            for (auto [x, y] : lay.xy) {
                CHECK(0 <= x);
                CHECK(x <= std::max(2 * g.n - 4, 1));
                CHECK(0 <= y);
                CHECK(y <= std::max(g.n - 2, 1));
            }
    }
}

TEST_CASE("outerplanarity and circle orders") {
    Graph fan = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(is_outerplanar(fan));
    CHECK(!is_outerplanar(complete_graph(4)));
    CHECK(!is_outerplanar(Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                                {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
    CHECK_THROWS_AS(outerplanar_circle_order(complete_graph(4)), precondition_error);

    // placing the vertices on a parabola in circle order realizes the graph
    // without crossings
    std::mt19937 rng(34);
    for (int t = 0; t < 10; ++t) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = testkit::random_planar(n, rng, 35);
        if (!is_outerplanar(g)) continue;
        auto order = outerplanar_circle_order(g);
        REQUIRE(static_cast<int>(order.size()) == n);
        std::vector<Pt> pts(n);
        for (int i = 0; i < n; ++i)
            pts[order[i]] = Pt{rat(i), rat(i) * rat(i)};
        auto rep = count_crossings(Drawing::straight_line(g, pts));
        CHECK(rep.proper());
        CHECK(rep.total == 0);
    }
}

TEST_CASE("exact predicates on hand cases") {
    CHECK(orient_sign(pt(0, 0), pt(2, 0), pt(1, 1)) == 1);
    CHECK(orient_sign(pt(0, 0), pt(2, 0), pt(1, -1)) == -1);
    CHECK(orient_sign(pt(0, 0), pt(2, 2), pt(5, 5)) == 0);

    CHECK(on_segment(pt(1, 1), pt(0, 0), pt(2, 2)));
    CHECK(on_segment(pt(0, 0), pt(0, 0), pt(2, 2)));
    CHECK(!on_segment(pt(3, 3), pt(0, 0), pt(2, 2)));
    CHECK(!on_segment(pt(1, 2), pt(0, 0), pt(2, 2)));

    // X configuration
    CHECK(proper_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    auto x = cross_point(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0));
    REQUIRE(x.has_value());
    CHECK(*x == pt(1, 1));
    CHECK(segment_parameter(*x, pt(0, 0), pt(2, 2)) == rat(1, 2));

    // T touch, shared endpoint, collinear overlap, parallel miss
    CHECK(!proper_cross(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 2)));
    CHECK(!proper_cross(pt(0, 0), pt(2, 0), pt(0, 0), pt(0, 2)));
    CHECK(!proper_cross(pt(0, 0), pt(3, 0), pt(1, 0), pt(4, 0)));
    CHECK(!proper_cross(pt(0, 0), pt(2, 0), pt(0, 1), pt(2, 1)));
    CHECK(segments_touch(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 2)));
    CHECK(segments_touch(pt(0, 0), pt(3, 0), pt(1, 0), pt(4, 0)));
    CHECK(!segments_touch(pt(0, 0), pt(2, 0), pt(0, 1), pt(2, 1)));

    CHECK(sq_dist(pt(0, 0), pt(3, 4)) == rat(25));
    CHECK(sq_dist_point_segment(pt(1, 1), pt(0, 0), pt(2, 0)) == rat(1));
    CHECK(sq_dist_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 2)) == rat(0));
    CHECK(sq_dist_segments(pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)) == rat(4));

    CHECK(pow2_unit_fraction_sq_below(rat(1, 10)) == rat(1, 4));
    CHECK(pow2_unit_fraction_sq_below(rat(9)) == rat(1));
    CHECK_THROWS_AS(pow2_unit_fraction_sq_below(rat(0)), precondition_error);
}

TEST_CASE("interval hull always contains the exact value") {
    std::mt19937 rng(35);
    for (int t = 0; t < 200; ++t) {
        bigint num = bigint(rng()) * bigint(rng()) - bigint(rng());
        bigint den = bigint(rng()) + 1;
        rat x(num, den);
        auto [lo, hi] = to_interval(x);
        CHECK(rat(lo) <= x);
        CHECK(x <= rat(hi));
    }
    // values far outside double range still get a finite-or-infinite hull
    rat huge = rat(bigint(1) << 2000);
    auto [lo, hi] = to_interval(huge);
    CHECK(rat(lo) <= huge);
    bool upper_ok = hi == std::numeric_limits<double>::infinity() || rat(hi) >= huge;
    CHECK(upper_ok);
}

TEST_CASE("candidate pairs cover every touching pair") {
    std::mt19937 rng(36);
    for (int t = 0; t < 30; ++t) {
        std::vector<std::pair<Pt, Pt>> segs;
        int k = 2 + static_cast<int>(rng() % 12);
        for (int i = 0; i < k; ++i)
            segs.push_back({pt(static_cast<long long>(rng() % 20),
                               static_cast<long long>(rng() % 20)),
                            pt(static_cast<long long>(rng() % 20),
                               static_cast<long long>(rng() % 20))});
        auto cand = candidate_pairs(segs);
        std::set<std::pair<int, int>> cs(cand.begin(), cand.end());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (segments_touch(segs[i].first, segs[i].second, segs[j].first,
                                   segs[j].second))
                    CHECK(cs.count({i, j}) == 1);
    }
}

TEST_CASE("maximum matching on classic graphs") {
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    CHECK(maximum_matching(petersen()).size() == 5);
    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(maximum_matching(star).size() == 1);
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(maximum_matching(c5).size() == 2);
    CHECK(maximum_matching(Graph(4)).empty());
}

TEST_CASE("maximum matching is a maximum matching") {
    std::mt19937 rng(37);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (rng() % 3 == 0) e.push_back({v, w});
        Graph g = Graph::from_edges(n, e);
        auto m = maximum_matching(g);
        std::vector<char> used(n, 0);
        for (auto [u, v] : m) {
            CHECK(g.has_edge(u, v));
            CHECK(!used[u]);
            CHECK(!used[v]);
            used[u] = used[v] = 1;
        }
        // brute force the true maximum over edge subsets (m is small)
        std::size_t best = 0;
        auto rec = [&](auto&& self, std::size_t i, std::vector<char>& bu,
                       std::size_t size) -> void {
            best = std::max(best, size);
            for (std::size_t j = i; j < g.edges.size(); ++j) {
                auto [u, v] = g.edges[j];
                if (bu[u] || bu[v]) continue;
                bu[u] = bu[v] = 1;
                self(self, j + 1, bu, size + 1);
                bu[u] = bu[v] = 0;
            }
        };
        std::vector<char> bu(n, 0);
        rec(rec, 0, bu, 0);
        CHECK(m.size() == best);
    }
}

TEST_CASE("minor oracles on classic graphs") {
    CHECK(has_k5_minor_small(complete_graph(5)));
    CHECK(has_k5_minor_small(complete_graph(6)));
    auto k5e = complete_graph(5).edges;
    k5e.pop_back();
    CHECK(!has_k5_minor_small(Graph::from_edges(5, k5e)));

    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK(has_k33_minor_small(k33));
    CHECK(!has_k5_minor_small(k33));

    // the Moebius ladder is the classic K33-but-not-K5 witness
    CHECK(has_k33_minor_small(v8_graph()));
    CHECK(!has_k5_minor_small(v8_graph()));

    CHECK(has_k5_minor_small(petersen()));
    CHECK(has_k33_minor_small(petersen()));
    CHECK(!has_k5_minor_small(grid(3, 3)));
    CHECK(!has_k33_minor_small(grid(3, 3)));

    CHECK(has_minor_small(complete_graph(4), Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
    CHECK(!has_minor_small(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                           complete_graph(4)));
}

TEST_CASE("treewidth oracle against textbook families") {
    Graph path = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                        {6, 7}, {7, 8}, {8, 9}});
    CHECK(treewidth_exact_small(path) == 1);
    Graph c7 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
    CHECK(treewidth_exact_small(c7) == 2);
    CHECK(treewidth_exact_small(complete_graph(5)) == 4);
    CHECK(treewidth_exact_small(Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                                      {1, 5}, {2, 3}, {2, 4}, {2, 5}})) == 3);
    CHECK(treewidth_exact_small(grid(3, 3)) == 3);
    CHECK(treewidth_exact_small(grid(4, 4)) == 4);
    CHECK(treewidth_exact_small(grid(2, 5)) == 2);
    // min degree is a treewidth lower bound, so the 4-regular octahedron has
    // treewidth exactly 4 (n-1 caps it at 5; bag {0..4} + bag {1..5} works)
    CHECK(treewidth_exact_small(octahedron()) == 4);
    CHECK(treewidth_exact_small(Graph(3)) == 0);

    std::mt19937 rng(38);
    for (int t = 0; t < 12; ++t) {
        Graph g = testkit::random_planar(4 + static_cast<int>(rng() % 9), rng, 55);
        TreeDecomp td;
        int tw = treewidth_exact_small(g, &td);
        CHECK(is_valid_tree_decomposition(g, td));
        CHECK(td.width() == tw);
    }
}

TEST_CASE("treewidth oracle size cap") {
    CHECK(treewidth_oracle_cap() == 18);
    setenv("PLANDEC_ORACLE_CAP", "8", 1);
    CHECK(treewidth_oracle_cap() == 8);
    Graph c10 = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                       {6, 7}, {7, 8}, {8, 9}, {0, 9}});
    CHECK_THROWS_AS(treewidth_exact_small(c10), precondition_error);
    unsetenv("PLANDEC_ORACLE_CAP");
    CHECK(treewidth_exact_small(c10) == 2);
}
