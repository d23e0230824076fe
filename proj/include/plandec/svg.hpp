#pragma once

#include "plandec/drawing.hpp"

#include <string>

namespace plandec {

/// SVG rendering of a drawing for inspection: edges as polylines, vertices
/// as labelled dots, crossings optionally marked.  Coordinates are rounded
/// to 1e-6 for display only; the JSON artifact keeps the exact rationals.
std::string drawing_to_svg(const Drawing& d, bool mark_crossings = false);

}  // namespace plandec
