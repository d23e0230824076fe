#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/treewidth.hpp"

#include <vector>

namespace plandec {

/// Planarization-based extraction of a width-2 planar decomposition from a
/// proper drawing (no degeneracies, and no crossings between edges sharing an
/// endpoint).
///
/// Non-strong mode: isolated vertices are paired into ceil(n0/2) bags, every
/// crossing becomes a two-vertex bag on the two crossing routes, and
/// remaining one-vertex bags are absorbed into neighboring bags where
/// possible.  The order is ceil(n0/2) + q + c + deficiency, where q counts
/// non-isolated vertices with no crossed incident edge and the deficiency is
/// forced by components of the crossed subgraph that are trees whose edges
/// all carry a single crossing (each such component leaves one vertex that no
/// crossing bag can host, rescueable only by merging with an adjacent
/// leftover singleton).
///
/// Strong mode: additionally subdivides one host edge per graph edge with the
/// bag {v,w}, then absorbs every non-isolated singleton; the order is exactly
/// ceil(n0/2) + c + |E|.
struct ExtractionResult {
    Decomposition decomp;
    long long crossings = 0;
    int isolated = 0;            ///< n0
    int quiet = 0;               ///< q
    long long claimed_order = 0; ///< ceil(n0/2)+q+c, or ceil(n0/2)+c+|E| when strong
    int deficiency = 0;          ///< actual order - claimed order (0 when strong)
};

ExtractionResult drawing_to_decomposition(const Drawing& dr, bool strong);

/// From a proper straight-line drawing with all vertices in strictly convex
/// position: builds the strong width-2 planarization, certifies it is shallow
/// (every bag within floor(k/2)+2 host-steps of an apex seeing all vertex
/// bags, where k is the largest over crossing pairs of the smaller per-edge
/// crossing count), converts shallowness into a tree decomposition of the
/// host via a BFS-tree/dual-tree construction, and lifts it to the graph.
/// The result is a valid tree decomposition with bags of size at most
/// 6*floor(k/2)+12, hence treewidth at most 3k+11.
struct ConvexExtraction {
    TreeDecomp td;
    int k = 0;
    long long crossings = 0;
    int host_depth = 0;    ///< max BFS depth from the apex (<= floor(k/2)+2)
    int host_bag_max = 0;  ///< largest host-decomposition bag (<= 3*floor(k/2)+6)
    int bag_max = 0;       ///< largest lifted bag (<= 6*floor(k/2)+12)
};

ConvexExtraction convex_to_tree_decomposition(const Drawing& dr);

}  // namespace plandec
