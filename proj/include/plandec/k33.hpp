#pragma once

#include "plandec/graph.hpp"
#include "plandec/partition.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace plandec {

/// Matching in a K3,3-minor-free graph whose contraction planarizes it: one
/// edge per complete-graph piece of the (<=2)-sum decomposition, chosen to
/// avoid both endpoints of `keep` and all previously matched vertices.
/// Guarantees: M is a matching in g, disjoint from `keep`; 3*|M| <= n - 2
/// unless M is empty; contracting M yields a planar graph (verified).
/// `keep` must be an edge of g.  Errors if g has a K3,3 minor.
std::vector<std::pair<int, int>> k33_planarizing_matching(const Graph& g,
                                                          std::pair<int, int> keep);

/// Width-<=2 partition with a planar pattern: matched pairs plus singletons.
/// At most (n-2)/3 bags have size 2.
Partition k33_planar_partition(const Graph& g);

/// Straight-line drawing of a K3,3-minor-free graph: zero bends, every edge
/// crossed at most 2*maxdeg times, total below maxdeg*(3n-5).  All bounds
/// re-checked against the exact crossing count.
PartitionDrawing k33_rectilinear_drawing(const Graph& g, std::uint64_t seed = 0);

}  // namespace plandec
