#include "plandec/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "plandec/errors.hpp"

namespace plandec {

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph b(static_cast<std::size_t>(g.n));
    for (const auto& [u, v] : g.edges)
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
        static_cast<std::size_t>(g.n));
    bool ok = boost::checked_edmonds_maximum_cardinality_matching(b, mate.data());
    check_invariant(ok, "matching failed its optimality certificate");

    std::vector<std::pair<int, int>> out;
    const auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < g.n; ++v)
        if (mate[v] != null_v && v < static_cast<int>(mate[v]))
            out.emplace_back(v, static_cast<int>(mate[v]));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace plandec
