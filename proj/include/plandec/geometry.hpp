#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace plandec {

// Exact rational arithmetic. All geometric predicates in this project are
// decided exactly; floating point appears only as a conservative prefilter.
using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

struct Pt {
    rat x;
    rat y;

    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    friend bool operator<(const Pt& a, const Pt& b)
    {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orient_sign(const Pt& a, const Pt& b, const Pt& c);

// p lies on the closed segment [a,b] (endpoints included; a==b allowed).
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// The open interiors of [a1,a2] and [b1,b2] cross transversally in one point.
// Shared endpoints, endpoint-on-interior touches and collinear overlaps return false.
bool proper_cross(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2);

// The closed segments share at least one point.
bool segments_touch(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2);

// Intersection point of two properly crossing segments (or of two non-parallel
// support lines restricted to both closed segments); nullopt when the segments
// are parallel or miss each other.
std::optional<Pt> cross_point(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2);

// Parameter t in [0,1] with p = a + t*(b-a), for p on the closed segment [a,b], a != b.
rat segment_parameter(const Pt& p, const Pt& a, const Pt& b);

rat sq_dist(const Pt& a, const Pt& b);
rat sq_dist_point_segment(const Pt& p, const Pt& a, const Pt& b);
// Minimum squared distance between two closed segments (0 when they touch).
rat sq_dist_segments(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2);

// Largest eps = 1/2^t (t >= 0) with eps^2 <= bound_sq; requires bound_sq > 0.
// Used to pick exact disc radii below a squared clearance threshold.
rat pow2_unit_fraction_sq_below(const rat& bound_sq);

// Conservative double interval [lo,hi] containing the exact rational x.
std::pair<double, double> to_interval(const rat& x);

// Indices (i,j), i<j, of segment pairs whose conservative bounding boxes
// overlap. Sort-and-sweep on x; a superset of the truly intersecting pairs.
std::vector<std::pair<int, int>>
candidate_pairs(const std::vector<std::pair<Pt, Pt>>& segs);

}  // namespace plandec
