#pragma once

#include "plandec/graph.hpp"

#include <string>
#include <vector>

namespace plandec {

/// Decomposition of a graph G: a host graph whose vertices index bags of
/// G-vertices, such that for every G-vertex v the bags containing v induce a
/// connected nonempty subgraph D(v) of the host, and for every G-edge vw the
/// subgraphs D(v) and D(w) touch (share a bag, or a host edge joins a bag
/// containing v to one containing w).
///
/// `strong` claims that D(v) and D(w) intersect for every edge vw.
/// `p` (>= 2) claims that every clique of size <= p lies in one bag or in the
/// union of two adjacent bags; a strong claim upgrades that to one bag.
/// Claims are data: `validate_decomposition` checks them.
struct Decomposition {
    Graph host;
    std::vector<std::vector<int>> bags;  ///< bag -> sorted distinct vertex ids
    bool strong = false;
    int p = 2;

    static Decomposition make(Graph host, std::vector<std::vector<int>> bags,
                              bool strong = false, int p = 2);

    int order() const { return static_cast<int>(bags.size()); }
    int width() const;
    int spread(int v) const;  ///< number of bags containing v
    int spread() const;       ///< max over vertices present in any bag
};

/// All ways `d` fails to be a valid decomposition of `g` under its claims
/// (empty means valid).  `require_planar` additionally demands a planar host.
std::vector<std::string> validate_decomposition(const Graph& g, const Decomposition& d,
                                                bool require_planar = true);

/// Number of G-edges a valid decomposition of width k can support:
/// strong: |E| <= C(k,2)*order;  general: |E| <= k^2*|E(host)| + C(k,2)*order.
/// Both are reported as violations by validate_decomposition when exceeded.
long long decomposition_edge_capacity(const Decomposition& d);

/// Host isomorphic to g itself, bag {v} per vertex.  Width 1, spread 1.
Decomposition identity_decomposition(const Graph& g);

/// Strong planar decomposition with one bag per index pair {i,j}, i <= j,
/// host edges joining {i,j} to {i+1,j} (indices taken as unordered pairs, so
/// the rule also yields the {j,j'}~{j,j'+1} steps).  The host is a subgraph
/// of the n x n grid.  Width 2, order n(n+1)/2, spread n per vertex.
Decomposition quadratic_decomposition(const Graph& g);

}  // namespace plandec
