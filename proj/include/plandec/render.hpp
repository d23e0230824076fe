#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/graph.hpp"

#include <cstdint>
#include <vector>

namespace plandec {

struct RenderResult {
    Drawing drawing;
    long long crossings = 0;
    /// Certified bound the output respects: 2 * sum over bags X of
    /// sum_{v<=x in X} deg(v)*deg(x)  (at most two crossings per charge class).
    long long charge_bound = 0;
    /// Coarser closed form: width*(width+1) * Delta^2 * order.
    long long coarse_bound = 0;
    int uncross_rounds = 0;
    int resamples = 0;
    /// Bags visited by each edge's route; interior bends = entry - 2
    /// (single-bag routes are straight segments).
    std::vector<int> route_bags;
};

/// Draw g according to a valid planar decomposition d.  Every vertex is
/// placed inside a small disc around its home bag's position in an exact
/// straight-line layout of the host; edges are routed as polylines whose
/// bends step through discs of bags along a shortest host walk from one
/// endpoint's home to the other's.  Crossings are then reduced by exchanging
/// bends until no two edges cross more than twice per shared-bag charge
/// class, which certifies the bounds above.  Deterministic for a fixed seed.
RenderResult render_decomposition(const Graph& g, const Decomposition& d,
                                  std::uint64_t seed);

}  // namespace plandec
