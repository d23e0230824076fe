#pragma once

#include <utility>
#include <vector>

#include "plandec/graph.hpp"

namespace plandec {

/// Combinatorial planar embedding: rotation[v] lists the ids of edges
/// incident to v in cyclic order.  `outer_face` indexes into `faces(g)` of
/// the same embedding and is chosen deterministically (largest face walk,
/// ties by smallest first directed edge).
struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation;
    int outer_face = 0;
};

/// One face per traversal walk.  `walk` holds directed half-edges (from, to)
/// in order; a bridge's edge appears twice (once per direction) in the same
/// face.  `vertices()` lists the walk's tail vertices in order (with
/// repetitions for cut vertices).
struct Face {
    std::vector<std::pair<int, int>> walk;
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(walk.size());
        for (auto& [u, v] : walk) out.push_back(u);
        return out;
    }
};

/// Boyer–Myrvold planarity test.  On success and if `emb` is non-null, fills
/// the rotation system (and outer_face).  Deterministic for a fixed input.
bool is_planar(const Graph& g, PlanarEmbedding* emb = nullptr);

/// All faces of the embedding, one list per traversal walk (each connected
/// component contributes its own walks; isolated vertices contribute none).
std::vector<Face> faces(const Graph& g, const PlanarEmbedding& emb);

/// For each edge id, the one or two distinct face ids its two half-edges lie
/// on (equal ids for a bridge).
std::vector<std::pair<int, int>> edge_faces(const Graph& g, const PlanarEmbedding& emb);

/// Supergraph of `g` on the same vertex set in which every face of some
/// planar embedding is a triangle (i.e. edge count reaches 3n-6), built by
/// repeatedly chording a non-triangular face.  Also connects a disconnected
/// input first.  Errors: n < 3, or `g` not planar.
Graph triangulate_planar(const Graph& g);

/// Crossing-free straight-line layout with integer coordinates, obtained by
/// triangulating, computing a canonical ordering and running the
/// shift-drawing; added edges are dropped afterwards.  Coordinates fit in a
/// (2n-4) x (n-2) grid per connected component; components are laid out side
/// by side with a gap.  The result is verified exactly (distinct points, no
/// vertex interior to a non-incident segment, no crossing pair).
struct GridLayout {
    std::vector<std::pair<long long, long long>> xy;
};
GridLayout straight_line_layout(const Graph& g);

/// True iff g has a planar embedding with every vertex on the outer face
/// (tested by planarity of g plus a universal apex).
bool is_outerplanar(const Graph& g);

/// A circular vertex order realizing an outerplanar graph as a crossing-free
/// convex (chord) drawing: the rotation of the universal apex in a planar
/// embedding of g + apex.  Errors if g is not outerplanar.
std::vector<int> outerplanar_circle_order(const Graph& g);

} // namespace plandec
