#pragma once

#include <string>

#include "curvemono/contour.hpp"

namespace curvemono {

// SVG 1.1 diagram of the configuration: one circle of radius R per
// discriminant point with its label, the marked points as dots, the base
// point as a small square, the tree edges as lines and the loop arcs as
// path commands.  The viewBox fits the discriminant set with a 10% margin.
std::string render_svg(const Configuration& config, const SpanningTree& tree,
                       const std::vector<Loop>& loops);

}  // namespace curvemono
