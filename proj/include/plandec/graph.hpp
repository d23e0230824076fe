#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace plandec {

/// Simple undirected graph with dense 0-based vertex ids.
///
/// Edges are stored canonically: each pair (u,v) with u < v, the list sorted
/// lexicographically and free of duplicates.  The index of an edge in
/// `edges` is its id, used by embeddings and drawings.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int n_) : n(n_) {}

    /// Normalizes, sorts and deduplicates `raw`; rejects self-loops and
    /// out-of-range endpoints.  Parallel edges are rejected when
    /// `allow_duplicates` is false (the file-format contract), merged
    /// otherwise (convenient for internal constructions).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> raw,
                            bool allow_duplicates = false);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    /// Id of edge {u,v}, or -1.
    int edge_id(int u, int v) const;

    /// Sorted adjacency lists (built on demand, O(n+m)).
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;

    /// Component id per vertex, ids dense from 0 in order of first vertex.
    std::vector<int> components(int* count = nullptr) const;
    bool connected() const;

    /// Induced subgraph on `verts` (kept order defines new ids).
    Graph induced(const std::vector<int>& verts) const;

    /// Graph with vertex pairs in `pairs` identified (each pair contracted
    /// to its first vertex); resulting ids are re-densified in increasing
    /// order of surviving original ids.  Loops dropped, parallels merged.
    Graph contract_pairs(const std::vector<std::pair<int, int>>& pairs) const;

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// ---- file format: edge-list text ------------------------------------------
// First line "n m", then m lines "u v" (0-based).  Round-trips byte-for-byte.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// ---- classic structure helpers ---------------------------------------------

struct DegeneracyOrder {
    std::vector<int> removal;  ///< removal[i] = i-th removed vertex
    std::vector<int> pos;      ///< pos[v] = removal index of v
    int d = 0;                 ///< degeneracy
};

/// Exact degeneracy via repeated minimum-degree removal (ties by smallest id).
/// Orienting every edge from later-removed to earlier-removed endpoint gives
/// an acyclic orientation with indegree <= d.
DegeneracyOrder degeneracy_order(const Graph& g);

/// In-neighbors of every vertex under the orientation of `degeneracy_order`:
/// in_nbrs[v] = { u adjacent to v : pos[u] > pos[v] }, each of size <= d.
std::vector<std::vector<int>> degeneracy_in_neighbors(const Graph& g,
                                                      const DegeneracyOrder& ord);

/// All cliques of size 1..p, each sorted ascending, list sorted
/// lexicographically.  p must be >= 1.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int p);

/// Exact clique number.  Intended for degenerate/sparse graphs: searches
/// within closed back-neighborhoods of a degeneracy order, so it is
/// exponential only in degeneracy+1.
int clique_number(const Graph& g);

/// Isomorphism test against the 8-vertex Moebius ladder (cycle 0..7 plus the
/// four antipodal chords).  If `map_out` is non-null and the test succeeds,
/// it receives an isomorphism: map_out[i] = vertex of g playing cycle role i.
bool is_v8(const Graph& g, std::vector<int>* map_out = nullptr);

/// The 8-vertex Moebius ladder itself (cycle 0-1-...-7-0 + chords i,i+4).
Graph v8_graph();

Graph complete_graph(int n);

} // namespace plandec
