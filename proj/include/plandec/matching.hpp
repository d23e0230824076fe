#pragma once

#include <utility>
#include <vector>

#include "plandec/graph.hpp"

namespace plandec {

/// Maximum-cardinality matching as a list of vertex pairs (u < v), sorted.
/// The certified blossom implementation is used, so the result is verified
/// maximum, not just maximal.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

} // namespace plandec
