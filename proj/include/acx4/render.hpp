#pragma once

#include <string>

#include "acx4/multifan.hpp"
#include "acx4/torusgraph.hpp"

namespace acx4 {

// All renderers are deterministic: equal input gives byte-identical output.

/// SVG 1.1 with one panel per fan. Each vector is a `<line class="vector">`
/// from the panel origin with an arrowhead marker and an "(x,y)" label; the
/// panel is scaled to the fan's bounding box plus a fixed margin.
std::string render_fan_svg(const MultiFanFamily& fam);

/// Graphviz digraph; every edge carries label "(x,y)".
std::string render_graph_dot(const TorusGraph& g);

/// A tikzpicture placing each component's vertices on a circle, edges drawn
/// as labelled arrows.
std::string render_graph_tikz(const TorusGraph& g);

}  // namespace acx4
