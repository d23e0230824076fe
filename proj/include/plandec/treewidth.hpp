#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plandec/graph.hpp"

namespace plandec {

/// Tree decomposition: bags of vertices plus tree edges between bag ids.
struct TreeDecomp {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> edges;

    int width() const;
};

/// Definition check: every vertex appears in a bag, every edge of g lies in
/// a bag, the bag ids containing any vertex induce a connected subtree, and
/// the edges form a tree on the bags.  On failure optionally reports why.
bool is_valid_tree_decomposition(const Graph& g, const TreeDecomp& td,
                                 std::string* why = nullptr);

/// Size cap (vertex count) for the exact treewidth oracle; override with
/// the environment variable PLANDEC_ORACLE_CAP.
int treewidth_oracle_cap();

/// Exact treewidth by dynamic programming over vertex subsets, intended as
/// an oracle for tests.  Optionally reconstructs an optimal (validated)
/// tree decomposition.  Errors if g exceeds the size cap.
int treewidth_exact_small(const Graph& g, TreeDecomp* td = nullptr);

} // namespace plandec
