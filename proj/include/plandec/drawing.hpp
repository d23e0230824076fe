#pragma once

#include "plandec/geometry.hpp"
#include "plandec/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace plandec {

/// Polyline drawing of a graph: one exact rational point per vertex, and per
/// edge the interior bend points ordered from the first (smaller-id) endpoint
/// of the canonical edge pair to the second.  Straight-line drawings have
/// empty bend lists.
struct Drawing {
    Graph g;
    std::vector<Pt> points;
    std::vector<std::vector<Pt>> bends;

    static Drawing straight_line(Graph g, std::vector<Pt> points);

    /// Full point sequence of edge e: endpoint, bends..., endpoint.
    std::vector<Pt> polyline(int e) const;
};

/// One transversal crossing between interiors of segments of two edges.
struct CrossingEvent {
    int e = -1, f = -1;       ///< edge ids, e < f
    int seg_e = -1, seg_f = -1;  ///< segment index within each polyline
    rat t_e, t_f;             ///< parameter in [0,1] within each segment
    Pt point;
};

/// Exact crossing census of a drawing.  `degeneracies` lists every way the
/// drawing fails to be in general position; a drawing is proper iff the list
/// is empty.  Crossings are still counted for degenerate drawings, but only
/// proper transversal interior crossings enter the counts.
struct CrossingReport {
    long long total = 0;
    std::vector<long long> per_edge;                    ///< crossings touching each edge
    std::map<std::pair<int, int>, long long> per_pair;  ///< (e<f) -> count
    std::vector<std::string> degeneracies;
    bool proper() const { return degeneracies.empty(); }
};

/// Degeneracy rules: coincident vertex points; zero-length or consecutive
/// collinearly-overlapping segments within a polyline; a vertex point lying
/// on a segment of an edge it is not an endpoint of; two segments touching in
/// a non-transversal way (endpoint-on-segment or collinear overlap), except
/// for the shared points that consecutive segments of one polyline or two
/// edges at a common endpoint are entitled to; self-intersections of one
/// polyline; and three or more edges passing through a common crossing point.
CrossingReport count_crossings(const Drawing& d,
                               std::vector<CrossingEvent>* events = nullptr);

// ---- file format: drawing JSON ---------------------------------------------
// {"points": [[xnum,xden,ynum,yden], ...],
//  "routes": [[ [xnum,xden,ynum,yden], ... ], ...]}   (one route per edge)

}  // namespace plandec
