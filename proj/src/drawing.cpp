#include "plandec/drawing.hpp"

#include "plandec/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace plandec {

Drawing Drawing::straight_line(Graph g, std::vector<Pt> points)
{
    Drawing d;
    d.g = std::move(g);
    d.points = std::move(points);
    d.bends.assign(d.g.m(), {});
    return d;
}

std::vector<Pt> Drawing::polyline(int e) const
{
    auto [u, v] = g.edges.at(e);
    std::vector<Pt> poly;
    poly.reserve(bends[e].size() + 2);
    poly.push_back(points[u]);
    for (const Pt& b : bends[e]) poly.push_back(b);
    poly.push_back(points[v]);
    return poly;
}

namespace {

std::string pt_str(const Pt& p)
{
    std::ostringstream os;
    os << "(" << p.x << "," << p.y << ")";
    return os.str();
}

}  // namespace

CrossingReport count_crossings(const Drawing& d, std::vector<CrossingEvent>* events)
{
    const Graph& g = d.g;
    check_precondition(static_cast<int>(d.points.size()) == g.n,
                       "drawing: one point per vertex required");
    check_precondition(static_cast<int>(d.bends.size()) == g.m(),
                       "drawing: one bend list per edge required");

    CrossingReport rep;
    rep.per_edge.assign(g.m(), 0);
    auto flag = [&](const std::string& what) {
        if (rep.degeneracies.size() < 200) rep.degeneracies.push_back(what);
    };

    // Coincident vertex points.
    {
        std::vector<int> idx(g.n);
        for (int v = 0; v < g.n; ++v) idx[v] = v;
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return d.points[a] < d.points[b]; });
        for (int i = 0; i + 1 < g.n; ++i)
            if (d.points[idx[i]] == d.points[idx[i + 1]])
                flag("vertices " + std::to_string(idx[i]) + " and " +
                     std::to_string(idx[i + 1]) + " share point " +
                     pt_str(d.points[idx[i]]));
    }

    // Flatten all polylines into segments.
    struct Seg {
        int e, idx;  // edge id, segment index within its polyline
        Pt a, b;
        bool valid;  // false for zero-length segments
    };
    std::vector<Seg> segs;
    std::vector<std::vector<Pt>> polys(g.m());
    for (int e = 0; e < g.m(); ++e) {
        polys[e] = d.polyline(e);
        const auto& poly = polys[e];
        for (int i = 0; i + 1 < static_cast<int>(poly.size()); ++i) {
            bool ok = !(poly[i] == poly[i + 1]);
            if (!ok) flag("edge " + std::to_string(e) + " has a zero-length segment");
            segs.push_back({e, i, poly[i], poly[i + 1], ok});
        }
        // A bend where the polyline doubles back over itself.
        for (int i = 1; i + 1 < static_cast<int>(poly.size()); ++i) {
            if (orient_sign(poly[i - 1], poly[i], poly[i + 1]) != 0) continue;
            rat dot = (poly[i].x - poly[i - 1].x) * (poly[i + 1].x - poly[i].x) +
                      (poly[i].y - poly[i - 1].y) * (poly[i + 1].y - poly[i].y);
            if (dot <= 0)
                flag("edge " + std::to_string(e) + " overlaps itself at bend " +
                     std::to_string(i - 1));
        }
    }

    // Vertex point on a segment of a non-incident edge (cheap box pretest).
    for (int v = 0; v < g.n; ++v) {
        auto [pxlo, pxhi] = to_interval(d.points[v].x);
        auto [pylo, pyhi] = to_interval(d.points[v].y);
        for (const Seg& s : segs) {
            if (!s.valid) continue;
            auto [u, w] = g.edges[s.e];
            if (u == v || w == v) continue;
            auto [ax, axh] = to_interval(s.a.x);
            auto [bx, bxh] = to_interval(s.b.x);
            auto [ay, ayh] = to_interval(s.a.y);
            auto [by, byh] = to_interval(s.b.y);
            if (pxhi < std::min(ax, bx) || pxlo > std::max(axh, bxh) ||
                pyhi < std::min(ay, by) || pylo > std::max(ayh, byh))
                continue;
            if (on_segment(d.points[v], s.a, s.b))
                flag("vertex " + std::to_string(v) + " lies on edge " +
                     std::to_string(s.e));
        }
    }

    // Pairwise segment analysis.
    std::vector<std::pair<Pt, Pt>> boxes;
    boxes.reserve(segs.size());
    for (const Seg& s : segs) boxes.emplace_back(s.a, s.b);
    std::vector<CrossingEvent> evs;
    for (auto [i, j] : candidate_pairs(boxes)) {
        const Seg& s = segs[i];
        const Seg& t = segs[j];
        if (!s.valid || !t.valid) continue;
        if (s.e == t.e) {
            if (std::abs(s.idx - t.idx) == 1) continue;  // consecutive: bend handled above
            if (segments_touch(s.a, s.b, t.a, t.b))
                flag("edge " + std::to_string(s.e) + " intersects itself");
            continue;
        }
        if (proper_cross(s.a, s.b, t.a, t.b)) {
            CrossingEvent ev;
            ev.e = s.e;
            ev.f = t.e;
            ev.seg_e = s.idx;
            ev.seg_f = t.idx;
            auto p = cross_point(s.a, s.b, t.a, t.b);
            check_invariant(p.has_value(), "crossing segments must intersect");
            ev.point = *p;
            ev.t_e = segment_parameter(ev.point, s.a, s.b);
            ev.t_f = segment_parameter(ev.point, t.a, t.b);
            evs.push_back(std::move(ev));
            continue;
        }
        if (!segments_touch(s.a, s.b, t.a, t.b)) continue;
        // Non-transversal contact.  The single point two edges with a common
        // endpoint are entitled to share is that endpoint, and only via the
        // route-end segments on both sides.
        auto [su, sv] = g.edges[s.e];
        auto [tu, tv] = g.edges[t.e];
        int shared = -1;
        for (int a : {su, sv})
            for (int b : {tu, tv})
                if (a == b) shared = a;
        if (shared >= 0) {
            const Pt& sp = d.points[shared];
            bool s_end = (s.a == sp && s.idx == 0) ||
                         (s.b == sp && s.idx + 2 == static_cast<int>(polys[s.e].size()));
            bool t_end = (t.a == sp && t.idx == 0) ||
                         (t.b == sp && t.idx + 2 == static_cast<int>(polys[t.e].size()));
            if (s_end && t_end) {
                // Allowed iff the contact is exactly the shared point: any
                // second contact point would make the union non-simple.
                bool extra = false;
                for (const Pt& q : {s.a, s.b})
                    if (!(q == sp) && on_segment(q, t.a, t.b)) extra = true;
                for (const Pt& q : {t.a, t.b})
                    if (!(q == sp) && on_segment(q, s.a, s.b)) extra = true;
                if (!extra) continue;
            }
        }
        flag("edges " + std::to_string(s.e) + " and " + std::to_string(t.e) +
             " touch without crossing");
    }

    std::sort(evs.begin(), evs.end(), [](const CrossingEvent& a, const CrossingEvent& b) {
        return std::tie(a.e, a.seg_e, a.t_e, a.f, a.seg_f) <
               std::tie(b.e, b.seg_e, b.t_e, b.f, b.seg_f);
    });

    // No three edges through a common point.  Two events can only share a
    // point via a third edge (a pair crossing twice at one point would have
    // been flagged as a self-touch or non-transversal contact already).
    {
        std::map<Pt, std::set<int>> at_point;
        for (const CrossingEvent& ev : evs) {
            auto& s = at_point[ev.point];
            s.insert(ev.e);
            s.insert(ev.f);
            if (s.size() >= 3)
                flag("three edges cross at " + pt_str(ev.point));
        }
    }

    rep.total = static_cast<long long>(evs.size());
    for (const CrossingEvent& ev : evs) {
        ++rep.per_edge[ev.e];
        ++rep.per_edge[ev.f];
        ++rep.per_pair[{ev.e, ev.f}];
    }
    if (events) *events = std::move(evs);
    return rep;
}

}  // namespace plandec
