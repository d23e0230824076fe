#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/graph.hpp"

#include <utility>
#include <vector>

namespace plandec {

/// Contract the host edge {a,b}: bag b is merged into bag a, host ids above b
/// shift down by one.  Preserves validity, planarity, strength and p; the new
/// bag is the union, so width can grow to |bag_a| + |bag_b|.
Decomposition contract_decomp_edge(const Decomposition& d, int a, int b);

/// Contract a host matching simultaneously (each pair merged into its first
/// element).  Width at most doubles; order drops by |m|.
Decomposition contract_decomp_matching(const Decomposition& d,
                                       const std::vector<std::pair<int, int>>& m);

/// Shrink the order to exactly max(target,1) by rounds of host triangulation
/// followed by contracting a maximum host matching (partially in the last
/// round).  Requires a planar host.  Each round at most doubles the width;
/// the round count is returned via rounds_out when non-null.
Decomposition reduce_order(Decomposition d, int target, int* rounds_out = nullptr);

/// Lift an outer decomposition `j` of `d.host` to a decomposition of the
/// original graph with host j.host: each new bag is the union of the d-bags
/// indexed by the corresponding j-bag.  Strength and p carry over from d;
/// width is at most d.width() * j.width().
Decomposition compose(const Decomposition& j, const Decomposition& d);

/// Strong omega-decomposition with host isomorphic to g: bag {v} plus the
/// in-neighbors of v under a minimum-degree (degeneracy) orientation.  Width
/// at most degeneracy+1.
Decomposition degen_omega(const Graph& g, int* degeneracy_out = nullptr);

/// Strong omega-decomposition of g isomorphic to d.host, obtained by lifting
/// d over degen_omega(g).  Width at most d.width() * (degeneracy+1).
Decomposition to_omega(const Graph& g, const Decomposition& d);

/// Host ids of the one or two bags covering the join clique on each side
/// after a clique sum (x == y when a single bag covers the side).
struct SumCovers {
    int x1 = -1, y1 = -1, x2 = -1, y2 = -1;
};

/// Decomposition of a clique sum G of two pieces.  to_gi maps piece-vertex
/// ids to G ids; join lists the shared clique in G ids.  The pieces' hosts
/// are joined by up to four edges between the bags covering the join clique
/// on either side.  Strong iff both inputs are strong (the join is then
/// covered by a single bag per side); p becomes min(d1.p, d2.p), which must
/// be >= |join|.  Duplicate bags are kept; contract them via
/// contract_decomp_edge if unwanted.
Decomposition clique_sum_decomp(const std::vector<int>& to_g1, const Decomposition& d1,
                                const std::vector<int>& to_g2, const Decomposition& d2,
                                const std::vector<int>& join, SumCovers* covers = nullptr);

}  // namespace plandec
