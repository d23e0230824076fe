#pragma once

#include "plandec/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plandec {

/// Leaf classification of a sum-tree piece.  `failure` marks a 3-connected
/// piece outside the expected class; it certifies that the input graph was
/// not in the class (the piece graph is the witness).
enum class PieceKind { planar, v8, k5, failure };

std::string piece_kind_name(PieceKind k);

struct SumPiece {
    Graph graph;             ///< piece-local graph, including virtual join edges
    std::vector<int> to_g;   ///< piece vertex -> input vertex id
    PieceKind kind = PieceKind::planar;
};

struct SumJoin {
    int a = -1, b = -1;                         ///< piece indices
    std::vector<int> set;                       ///< shared input-vertex ids (clique)
    std::vector<std::pair<int, int>> deleted;   ///< join-clique pairs absent from the input
};

/// Clique-sum tree: pieces glued pairwise along join cliques, tree-shaped.
/// Joins with an empty set chain the connected components (disjoint union).
struct SumTree {
    int n = 0;
    std::vector<SumPiece> pieces;
    std::vector<SumJoin> joins;

    /// Union of all piece edges (mapped to input ids) minus all deleted
    /// pairs: recomposition must reproduce the input graph exactly.
    Graph compose() const;

    bool has_failure() const;
    /// Index of some failure piece, or -1.
    int failure_piece() const;
};

/// Decomposes into planar and Moebius-ladder (V8) pieces along joins of size
/// <= 3: connected components, then blocks at cut vertices, then recursive
/// separation-pair splits (virtual join edges added to both sides), then
/// separating-triangle splits of the remaining 3-connected pieces.  Every
/// leaf of a K5-minor-free input is planar or V8; anything else is tagged
/// failure.
SumTree wagner_k5_decompose(const Graph& g);

/// Same skeleton with joins of size <= 2 and leaves planar or K5, per the
/// K3,3-minor-free characterisation.
SumTree wagner_k33_decompose(const Graph& g);

/// Joins listed in breadth-first order from piece `root`: each entry is
/// (join index, the piece the join newly attaches).  Every piece other than
/// the root is attached exactly once; errors if the joins do not connect the
/// pieces into one tree.
std::vector<std::pair<int, int>> sum_tree_walk(const SumTree& t, int root = 0);

/// Edge-maximal K5-minor-free supergraph on the same vertex set: decomposes,
/// upgrades every join to a triangle (or to an edge of an incident V8 piece)
/// by sharing vertices across the join, and triangulates the planar pieces.
/// Errors if g is not K5-minor-free.
Graph maximal_k5_completion(const Graph& g);

}  // namespace plandec
