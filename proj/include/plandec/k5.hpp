#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/graph.hpp"
#include "plandec/render.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace plandec {

/// Proper 4-colouring (values 0..3) of a planar graph: greedy over a
/// smallest-last order with Kempe-chain repairs, falling back to exact
/// backtracking with a step budget.  Exceeding the budget raises an
/// invariant error, since planar inputs always admit a colouring.
std::vector<int> four_colour_planar(const Graph& g);

/// Tripartition of the edges of an edge-maximal K5-minor-free graph such
/// that every triangle has one edge of each class and the edge set of every
/// Moebius-ladder piece splits into three perfect matchings.  cls[j] holds
/// the class-j edges (canonical pairs, sorted); missed[j] the vertices no
/// class-j edge touches.  For an edge-maximal input the missed sets are
/// pairwise disjoint, so some class misses at most n/3 vertices.
struct EdgeTripartition {
    std::array<std::vector<std::pair<int, int>>, 3> cls;
    std::array<std::vector<int>, 3> missed;
};

/// Builds the tripartition piece-wise over the clique-sum tree: planar
/// pieces (which must be triangulations) are 4-coloured and edges classed by
/// the colour pairing {ab|cd, ac|bd, ad|bc}; ladder pieces get the three
/// fixed matchings (cycle-odd, cycle-even, chords); classes are aligned
/// across each join by an index permutation matching the join edges' classes
/// on both sides.  Requires n >= 3 and a connected edge-maximal input
/// (detectable violations -- non-triangulation pieces, non-clique or deleted
/// joins, cut vertices -- raise precondition errors).
EdgeTripartition edge_partition_k5(const Graph& g);

/// Planar decomposition of width 2 whose bag set is exactly one bag {v,w}
/// per edge vw of e_set plus one bag {v} per vertex v no e_set edge touches.
/// Hypotheses: g is K5-minor-free, every triangle of g has exactly one e_set
/// edge, and e_set restricted to any Moebius-ladder piece of g's clique-sum
/// tree is a perfect matching.  The result also covers every clique of g by
/// one bag or two adjacent bags (an omega-decomposition); its p field is set
/// to the clique number.
Decomposition omega_decomp_from_E(const Graph& g,
                                  const std::vector<std::pair<int, int>>& e_set);

/// End-to-end width-2 pipeline for a K5-minor-free graph (n >= 3): complete
/// to an edge-maximal supergraph, tripartition its edges, pick the class
/// missing the fewest vertices (at most n/3), and build the bag-per-edge
/// decomposition.  At most n-2 two-vertex bags, at most n/3 singletons,
/// order <= 4n/3 - 2.
Decomposition planar_omega_decomp_k5(const Graph& g);

/// Draws a K5-minor-free graph by rendering planar_omega_decomp_k5.  The
/// exact crossing count is certified below (20/3) * maxdeg^2 * n whenever
/// the graph has an edge (checked, never assumed).
RenderResult crossings_k5(const Graph& g, std::uint64_t seed = 0);

/// Strong planar 3-decomposition of width 3 and order <= 3n-8 (n >= 4; one
/// bag when n = 3): triangulation pieces contribute their face adjacency
/// graph (one bag per triangular face, order 2n-4), ladder pieces the
/// order-13 extraction from the one-crossing drawing, and triangle joins
/// contract the two copies of the shared face bag.
Decomposition strong_3_decomp_k5(const Graph& g);

/// Strong planar decomposition of width 4 covering every clique in a single
/// bag (K5-minor-free graphs have cliques of size <= 4), order <= 4n/3 - 4
/// (n >= 4).  Triangulation pieces use one quadruple bag per edge of a Tait
/// class (the edge's two incident triangles), ladder pieces a fixed 4-cycle
/// of quadruples.
Decomposition strong_omega_decomp_k5(const Graph& g);

/// Polyline drawing of the Moebius ladder (ladder vertex roles 0..7) with
/// exactly one crossing: integer points, one bend on edge {0,1}, crossing
/// edge {3,4}.  One crossing is optimal since the ladder is nonplanar.
Drawing v8_one_crossing_drawing();

/// Width-2 order-7 planar decomposition of the Moebius ladder (roles 0..7):
/// bags for the four odd cycle edges plus three of the chords, glued along a
/// 4-cycle host with one chord and three attached bags.
Decomposition v8_omega_decomposition();

}  // namespace plandec
