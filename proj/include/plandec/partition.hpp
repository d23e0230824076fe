#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/graph.hpp"
#include "plandec/treewidth.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plandec {

/// Partition of V(host) into disjoint nonempty bags, together with the
/// pattern (quotient) graph on bag ids: bags are adjacent iff some host edge
/// crosses between them.
struct Partition {
    Graph host;
    std::vector<std::vector<int>> bags;  ///< sorted disjoint covers of V(host)
    Graph pattern;

    int width() const;  ///< largest bag size
};

/// Quotient graph of `host` under `bags` (loops dropped, duplicates merged).
Graph partition_pattern(const Graph& host, const std::vector<std::vector<int>>& bags);

/// Builds a Partition (sorting bags, computing the pattern); throws on
/// overlapping, empty or non-covering bags.
Partition make_partition(Graph host, std::vector<std::vector<int>> bags);

/// All ways `p` fails to be a valid partition with exact pattern.
std::vector<std::string> validate_partition(const Partition& p);

/// Spread-1 view of a partition: decomposition with host = pattern and the
/// partition bags.  Valid for any partition; planar iff the pattern is.
Decomposition partition_decomposition(const Partition& p);

struct PartitionDrawing {
    Drawing drawing;
    CrossingReport report;
};

/// Straight-line drawing of a partition with a planar pattern: bags become
/// small discs placed by a plane embedding of the pattern, so two edges can
/// cross only if an endpoint of one shares a bag with an endpoint of the
/// other (and they share no endpoint).  Each edge crosses at most
/// 2 * maxdeg * (width-1) others; the total is at most (width-1)*maxdeg*|E|.
/// All bounds are certified against an exact recount.
PartitionDrawing produce_drawing(const Partition& p, std::uint64_t seed = 0);

struct ConvexPartitionDrawing {
    Drawing drawing;
    CrossingReport report;
    long long convex_count = 0;  ///< combinatorial count; equals report.total
    int resamples = 0;           ///< point sets re-drawn to escape degeneracy
};

/// Straight-line drawing of a partition with an outerplanar pattern, all
/// vertices in strictly convex position on the unit circle: bags occupy
/// contiguous arcs in an outerplanar order of the pattern.  Per-edge
/// crossings are at most 2 * maxdeg * (width-1); the geometric count must
/// match the combinatorial interleaving count exactly.
ConvexPartitionDrawing produce_convex_drawing(const Partition& p, std::uint64_t seed = 0);

struct TreePartitionResult {
    Partition partition;
    int td_bag_max = 0;          ///< largest bag of the input tree decomposition
    bool width_bound_met = false;  ///< 4*width <= 5*td_bag_max*(7*maxdeg - 2)
};

/// Partition with a forest pattern (hard guarantee) built from a tree
/// decomposition: vertices group at their topmost bag, groups merge along
/// tree paths until every edge joins equal or adjacent groups, and isolated
/// groups split in half.  The width is reported against the target
/// 5/4 * td_bag_max * (7*maxdeg - 2); exceeding it flags the run but is not
/// an error.
TreePartitionResult tree_partition(const Graph& g, const TreeDecomp& td);

struct ConvexPipelineResult {
    TreePartitionResult tp;
    ConvexPartitionDrawing draw;
    int treewidth = 0;           ///< width of the tree decomposition used
    long long per_edge_max = 0;
    bool per_edge_bound_met = false;  ///< per-edge < 5*maxdeg*(tw+1)*(7*maxdeg-1)
    bool total_bound_met = false;     ///< 2*total < 17*(tw+1)*maxdeg^2*|E|
};

/// Tree-partition + convex drawing pipeline.  Uses the exact treewidth
/// oracle when td is null (subject to the oracle size cap); the per-edge
/// bound is enforced whenever the tree-partition width met its target, the
/// total bound additionally requires maxdeg <= 10 (the constant amortizes
/// the per-edge slack only in that range).
ConvexPipelineResult convex_treewidth_pipeline(const Graph& g, const TreeDecomp* td = nullptr,
                                               std::uint64_t seed = 0);

}  // namespace plandec
