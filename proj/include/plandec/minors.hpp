#pragma once

#include "plandec/graph.hpp"

namespace plandec {

/// Size cap (on the host vertex count) for the exact minor test; override
/// with the environment variable PLANDEC_ORACLE_CAP.
int minor_oracle_cap();

/// Exact minor test for small hosts, by exhaustive recursion on vertex
/// deletions and edge contractions with memoization.  Intended as an oracle
/// for tests and spot checks; errors if g exceeds the size cap.
bool has_minor_small(const Graph& g, const Graph& h);

/// Convenience forms for the two excluded minors this project revolves
/// around (prunes are sharper for these).
bool has_k5_minor_small(const Graph& g);
bool has_k33_minor_small(const Graph& g);

} // namespace plandec
