#include "plandec/geometry.hpp"

#include "plandec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plandec {

int orient_sign(const Pt& a, const Pt& b, const Pt& c)
{
    rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (cross > 0) return 1;
    if (cross < 0) return -1;
    return 0;
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b)
{
    if (orient_sign(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool proper_cross(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2)
{
    int o1 = orient_sign(a1, a2, b1);
    int o2 = orient_sign(a1, a2, b2);
    int o3 = orient_sign(b1, b2, a1);
    int o4 = orient_sign(b1, b2, a2);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

bool segments_touch(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2)
{
    if (proper_cross(a1, a2, b1, b2)) return true;
    return on_segment(b1, a1, a2) || on_segment(b2, a1, a2) ||
           on_segment(a1, b1, b2) || on_segment(a2, b1, b2);
}

std::optional<Pt> cross_point(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2)
{
    rat dax = a2.x - a1.x, day = a2.y - a1.y;
    rat dbx = b2.x - b1.x, dby = b2.y - b1.y;
    rat denom = dax * dby - day * dbx;
    if (denom == 0) return std::nullopt;
    rat s = ((b1.x - a1.x) * dby - (b1.y - a1.y) * dbx) / denom;
    rat t = ((b1.x - a1.x) * day - (b1.y - a1.y) * dax) / denom;
    if (s < 0 || s > 1 || t < 0 || t > 1) return std::nullopt;
    return Pt{a1.x + s * dax, a1.y + s * day};
}

rat segment_parameter(const Pt& p, const Pt& a, const Pt& b)
{
    if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
    return (p.y - a.y) / (b.y - a.y);
}

rat sq_dist(const Pt& a, const Pt& b)
{
    rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

rat sq_dist_point_segment(const Pt& p, const Pt& a, const Pt& b)
{
    if (a == b) return sq_dist(p, a);
    rat dx = b.x - a.x, dy = b.y - a.y;
    rat t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
    if (t <= 0) return sq_dist(p, a);
    if (t >= 1) return sq_dist(p, b);
    Pt foot{a.x + t * dx, a.y + t * dy};
    return sq_dist(p, foot);
}

rat sq_dist_segments(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2)
{
    if (segments_touch(a1, a2, b1, b2)) return rat(0);
    // For disjoint segments the minimum is attained at an endpoint of one of them.
    rat best = sq_dist_point_segment(a1, b1, b2);
    best = std::min(best, sq_dist_point_segment(a2, b1, b2));
    best = std::min(best, sq_dist_point_segment(b1, a1, a2));
    best = std::min(best, sq_dist_point_segment(b2, a1, a2));
    return best;
}

rat pow2_unit_fraction_sq_below(const rat& bound_sq)
{
    check_precondition(bound_sq > 0, "pow2_unit_fraction_sq_below: bound must be positive");
    rat eps(1);
    while (eps * eps > bound_sq) eps /= 2;
    return eps;
}

std::pair<double, double> to_interval(const rat& x)
{
    double d = x.convert_to<double>();
    // Conversion rounds; two ulps of slack in each direction keeps the
    // interval a guaranteed enclosure.
    double lo = std::nextafter(std::nextafter(d, -std::numeric_limits<double>::infinity()),
                               -std::numeric_limits<double>::infinity());
    double hi = std::nextafter(std::nextafter(d, std::numeric_limits<double>::infinity()),
                               std::numeric_limits<double>::infinity());
    return {lo, hi};
}

std::vector<std::pair<int, int>>
candidate_pairs(const std::vector<std::pair<Pt, Pt>>& segs)
{
    struct Box {
        double xlo, xhi, ylo, yhi;
        int id;
    };
    std::vector<Box> boxes;
    boxes.reserve(segs.size());
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
        auto [x1lo, x1hi] = to_interval(segs[i].first.x);
        auto [x2lo, x2hi] = to_interval(segs[i].second.x);
        auto [y1lo, y1hi] = to_interval(segs[i].first.y);
        auto [y2lo, y2hi] = to_interval(segs[i].second.y);
        boxes.push_back({std::min(x1lo, x2lo), std::max(x1hi, x2hi),
                         std::min(y1lo, y2lo), std::max(y1hi, y2hi), i});
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) { return a.xlo < b.xlo; });

    std::vector<std::pair<int, int>> out;
    std::vector<int> active;
    for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
        const Box& b = boxes[i];
        std::vector<int> still;
        still.reserve(active.size());
        for (int j : active) {
            const Box& a = boxes[j];
            if (a.xhi < b.xlo) continue;
            still.push_back(j);
            if (a.ylo <= b.yhi && b.ylo <= a.yhi)
                out.emplace_back(std::min(a.id, b.id), std::max(a.id, b.id));
        }
        still.push_back(i);
        active.swap(still);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace plandec
