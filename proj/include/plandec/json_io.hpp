#pragma once

#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/graph.hpp"
#include "plandec/partition.hpp"
#include "plandec/planarity.hpp"
#include "plandec/sum_tree.hpp"

#include <string>

namespace plandec {

// JSON artifact formats.  Graphs ride along inside artifacts as edge-list
// text (the "n m" + "u v" lines format) so every file verifies standalone.
// Rational coordinates are [xnum, xden, ynum, yden] quads whose entries are
// decimal strings: exactness survives any magnitude.  All readers throw
// parse_error on malformed input.

// {"rotation": [[edge ids]...], "outer": f}
std::string embedding_to_json(const PlanarEmbedding& emb);
PlanarEmbedding embedding_from_json(const std::string& text);

// {"host": "<edge list>", "bags": [[v...]...], "dedges": [[i,j]...],
//  "strong": bool, "p": int}
struct DecompositionArtifact {
    Graph g;          ///< the decomposed graph
    Decomposition d;
};
std::string decomposition_to_json(const Graph& g, const Decomposition& d);
DecompositionArtifact decomposition_from_json(const std::string& text);

// {"host": "<edge list>", "points": [[quad]...], "routes": [[[quad]...]...]}
std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

// {"n": int, "pieces": [{"graph": "<edge list>", "to_g": [v...], "kind":
//  name}...], "joins": [{"a": i, "b": j, "set": [v...], "deleted":
//  [[u,v]...]}...]}
std::string sum_tree_to_json(const SumTree& t);
SumTree sum_tree_from_json(const std::string& text);

// {"host": "<edge list>", "bags": [[v...]...]}; the pattern is re-derived.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

// {"total": n, "per_edge": [...], "degeneracies": [...], "proper": bool}
std::string crossing_report_to_json(const CrossingReport& r);

}  // namespace plandec
