#include "plandec/render.hpp"

#include "plandec/errors.hpp"
#include "plandec/planarity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace plandec {

namespace {

struct RouteNode {
    int bag;
    int side;  // 0 = first endpoint's phase, 1 = second's
};

// Shortest bag walk from the home of u to the home of v: a prefix of bags
// containing u followed by a suffix of bags containing w, consecutive bags
// equal once (an in-place phase flip) or host-adjacent.  0-1 BFS over
// (bag, side) states; the returned bags are pairwise distinct.
std::vector<RouteNode> route_edge(const Decomposition& d,
                                  const std::vector<std::vector<int>>& host_adj,
                                  const std::vector<std::vector<char>>& in_bag,
                                  int u, int v, int home_u, int home_v)
{
    const int nb = d.order();
    auto id = [](int bag, int side) { return bag * 2 + side; };
    std::vector<int> dist(2 * nb, -1), par(2 * nb, -1);
    std::deque<int> dq;
    int s = id(home_u, 0), t = id(home_v, 1);
    dist[s] = 0;
    dq.push_back(s);
    while (!dq.empty()) {
        int cur = dq.front();
        dq.pop_front();
        if (cur == t) break;
        int bag = cur / 2, side = cur % 2;
        auto relax = [&](int nxt, int w) {
            if (dist[nxt] != -1 && dist[nxt] <= dist[cur] + w) return;
            dist[nxt] = dist[cur] + w;
            par[nxt] = cur;
            if (w == 0)
                dq.push_front(nxt);
            else
                dq.push_back(nxt);
        };
        if (side == 0 && in_bag[bag][1]) relax(id(bag, 1), 0);
        for (int nb2 : host_adj[bag]) {
            if (in_bag[nb2][side] && side == 0) relax(id(nb2, 0), 1);
            if (in_bag[nb2][1]) relax(id(nb2, 1), 1);
        }
    }
    check_invariant(dist[t] != -1, "render: endpoints' bag subgraphs do not touch");

    std::vector<RouteNode> route;
    for (int cur = t; cur != -1; cur = par[cur])
        route.push_back({cur / 2, cur % 2});
    std::reverse(route.begin(), route.end());
    // Collapse the in-place flip: the bag keeps its entry side.
    std::vector<RouteNode> out;
    for (const RouteNode& rn : route)
        if (out.empty() || out.back().bag != rn.bag) out.push_back(rn);
    std::set<int> seen;
    for (const RouteNode& rn : out)
        check_invariant(seen.insert(rn.bag).second, "render: route revisits a bag");
    (void)u;
    (void)v;
    return out;
}

}  // namespace

RenderResult render_decomposition(const Graph& g, const Decomposition& d,
                                  std::uint64_t seed)
{
    {
        auto bad = validate_decomposition(g, d, /*require_planar=*/true);
        if (!bad.empty())
            throw precondition_error("render: invalid decomposition: " + bad.front());
    }
    const int nb = d.order();
    const auto deg = g.degrees();

    std::vector<int> home(g.n, -1);
    for (int b = 0; b < nb; ++b)
        for (int x : d.bags[b])
            if (home[x] == -1) home[x] = b;
    for (int v = 0; v < g.n; ++v)
        check_precondition(home[v] >= 0, "render: vertex missing from all bags");

    // ---- exact geometry of the host -------------------------------------
    GridLayout layout = straight_line_layout(d.host);
    std::vector<Pt> center(nb);
    for (int b = 0; b < nb; ++b)
        center[b] = Pt{rat(layout.xy[b].first), rat(layout.xy[b].second)};

    rat delta_sq(4);
    for (int a = 0; a < nb; ++a)
        for (int b = a + 1; b < nb; ++b)
            delta_sq = std::min(delta_sq, sq_dist(center[a], center[b]));
    for (auto [x, y] : d.host.edges)
        for (int b = 0; b < nb; ++b) {
            if (b == x || b == y) continue;
            delta_sq = std::min(delta_sq,
                                sq_dist_point_segment(center[b], center[x], center[y]));
        }
    check_invariant(delta_sq > 0, "render: host layout has coincident features");
    const rat eps = pow2_unit_fraction_sq_below(delta_sq / 9);
    const rat four_eps_sq = 4 * eps * eps;

    // Disc and tube disjointness, verified rather than assumed.
    for (int a = 0; a < nb; ++a)
        for (int b = a + 1; b < nb; ++b)
            check_invariant(sq_dist(center[a], center[b]) > four_eps_sq,
                            "render: bag discs overlap");
    for (std::size_t i = 0; i < d.host.edges.size(); ++i)
        for (std::size_t j = i + 1; j < d.host.edges.size(); ++j) {
            auto [a1, a2] = d.host.edges[i];
            auto [b1, b2] = d.host.edges[j];
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
            check_invariant(sq_dist_segments(center[a1], center[a2], center[b1],
                                             center[b2]) > four_eps_sq,
                            "render: bag tubes overlap");
        }

    // ---- routes ----------------------------------------------------------
    auto host_adj = d.host.adjacency();
    std::vector<std::vector<RouteNode>> routes(g.m());
    {
        std::vector<std::vector<char>> in_bag(nb, std::vector<char>(2, 0));
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[e];
            for (int b = 0; b < nb; ++b) {
                in_bag[b][0] = std::binary_search(d.bags[b].begin(), d.bags[b].end(), u);
                in_bag[b][1] = std::binary_search(d.bags[b].begin(), d.bags[b].end(), v);
            }
            routes[e] = route_edge(d, host_adj, in_bag, u, v, home[u], home[v]);
            int su = d.spread(u), sv = d.spread(v);
            check_invariant(static_cast<int>(routes[e].size()) <= su + sv,
                            "render: route longer than combined spread");
        }
    }

    // Slot owners: one pool point per (bag, bend) plus one per homed vertex;
    // per-vertex consumption within a bag stays below its degree.
    std::vector<std::map<int, int>> owner_count(nb);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        const auto& r = routes[e];
        for (std::size_t i = 1; i + 1 < r.size(); ++i) {
            int z = r[i].side == 0 ? u : v;
            int c = ++owner_count[r[i].bag][z];
            check_invariant(c <= deg[z], "render: bend pool for a vertex overflows");
        }
    }

    // ---- point sampling --------------------------------------------------
    std::mt19937_64 gen(seed);
    const long long W = 1 << 20;
    auto sample_in_disc = [&](int bag, std::set<Pt>& used) {
        for (int tries = 0; tries < 4096; ++tries) {
            long long a =
                static_cast<long long>(gen() % static_cast<std::uint64_t>(2 * W - 1)) -
                (W - 1);
            long long b =
                static_cast<long long>(gen() % static_cast<std::uint64_t>(2 * W - 1)) -
                (W - 1);
            if (a * a + b * b >= W * W) continue;
            Pt p{center[bag].x + rat(a) * eps / W, center[bag].y + rat(b) * eps / W};
            if (used.insert(p).second) return p;
        }
        throw invariant_error("render: disc sampling failed");
    };

    RenderResult res;
    res.route_bags.resize(g.m());
    for (int e = 0; e < g.m(); ++e) res.route_bags[e] = static_cast<int>(routes[e].size());

    auto resample_all = [&]() {
        std::vector<std::set<Pt>> used(nb);
        res.drawing.g = g;
        res.drawing.points.assign(g.n, Pt{});
        res.drawing.bends.assign(g.m(), {});
        for (int v = 0; v < g.n; ++v)
            res.drawing.points[v] = sample_in_disc(home[v], used[home[v]]);
        for (int e = 0; e < g.m(); ++e) {
            const auto& r = routes[e];
            res.drawing.bends[e].clear();
            for (std::size_t i = 1; i + 1 < r.size(); ++i)
                res.drawing.bends[e].push_back(sample_in_disc(r[i].bag, used[r[i].bag]));
        }
    };
    resample_all();

    // ---- uncrossing ------------------------------------------------------
    // Charge classes: (edge e, its endpoint in X, edge f, its endpoint in X,
    // bag X).  Each crossing belongs to one class; a class with >= 3
    // crossings admits a bend exchange inside the disc of X that strictly
    // shortens the total route length, so the loop terminates.
    auto seg_bags = [&](int e, int seg) -> std::pair<int, int> {
        const auto& r = routes[e];
        if (r.size() == 1) return {r[0].bag, r[0].bag};
        return {r[seg].bag, r[seg + 1].bag};
    };
    std::set<std::size_t> state_seen;
    auto state_hash = [&]() {
        std::ostringstream os;
        for (const auto& bl : res.drawing.bends)
            for (const Pt& p : bl) os << p.x << ";" << p.y << "|";
        return std::hash<std::string>{}(os.str());
    };

    const int max_rounds = 20000;
    std::vector<CrossingEvent> events;
    CrossingReport rep;
    for (int round = 0;; ++round) {
        check_invariant(round < max_rounds, "render: uncross loop exceeded bound");
        rep = count_crossings(res.drawing, &events);
        if (!rep.proper()) {
            check_invariant(++res.resamples <= 64, "render: repeated degenerate samples");
            resample_all();
            state_seen.clear();
            continue;
        }
        // Tuple census.
        struct Key {
            int e, ce, f, cf, bag;
            bool operator<(const Key& o) const
            {
                return std::tie(e, ce, f, cf, bag) < std::tie(o.e, o.ce, o.f, o.cf, o.bag);
            }
        };
        std::map<Key, int> tuples;
        for (const CrossingEvent& ev : events) {
            auto [ea, eb] = seg_bags(ev.e, ev.seg_e);
            auto [fa, fb] = seg_bags(ev.f, ev.seg_f);
            int common = -1;
            for (int x : {ea, eb})
                for (int y : {fa, fb})
                    if (x == y && (common == -1 || x < common)) common = x;
            check_invariant(common >= 0, "render: crossing outside any shared region");
            auto side_vertex = [&](int e2, int bag) {
                auto [u2, v2] = g.edges[e2];
                for (const RouteNode& rn : routes[e2])
                    if (rn.bag == bag) return rn.side == 0 ? u2 : v2;
                throw invariant_error("render: charged bag not on route");
            };
            ++tuples[Key{ev.e, side_vertex(ev.e, common), ev.f, side_vertex(ev.f, common),
                         common}];
        }
        const Key* offender = nullptr;
        for (const auto& [k, c] : tuples)
            if (c >= 3) {
                offender = &k;
                break;
            }
        if (!offender) break;

        // Exchange the two bends inside the shared disc.
        auto bend_index = [&](int e2, int bag) {
            const auto& r = routes[e2];
            for (std::size_t i = 1; i + 1 < r.size(); ++i)
                if (r[i].bag == bag) return static_cast<int>(i) - 1;
            throw invariant_error("render: overloaded charge class without a bend");
        };
        int be = bend_index(offender->e, offender->bag);
        int bf = bend_index(offender->f, offender->bag);
        std::swap(res.drawing.bends[offender->e][be], res.drawing.bends[offender->f][bf]);
        ++res.uncross_rounds;
        if (!state_seen.insert(state_hash()).second) {
            // A revisited configuration can only arise from a degenerate
            // exchange; fresh points break the tie.
            check_invariant(++res.resamples <= 64, "render: uncross cycling");
            resample_all();
            state_seen.clear();
        }
    }

    // ---- certified bounds -------------------------------------------------
    long long charge = 0;
    for (const auto& bag : d.bags)
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i; j < bag.size(); ++j)
                charge += 2LL * deg[bag[i]] * deg[bag[j]];
    long long delta = g.max_degree();
    long long k = d.width();
    res.charge_bound = charge;
    res.coarse_bound = k * (k + 1) * delta * delta * nb;
    res.crossings = rep.total;
    check_invariant(res.crossings <= res.charge_bound,
                    "render: crossings exceed the charge bound");
    check_invariant(res.charge_bound <= res.coarse_bound,
                    "render: charge bound exceeds closed form");
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        check_invariant(static_cast<int>(res.drawing.bends[e].size()) <=
                            d.spread(u) + d.spread(v) - 2,
                        "render: bend bound violated");
    }
    return res;
}

}  // namespace plandec
