#pragma once

#include <string>

#include "relemb/embedding.hpp"

namespace relemb {

// Static SVG: vertices on a circle (class "vertex"), each arc a directed
// curve (class "arc"), and every face traced as a colored polyline (class
// "proface" or "antiface") with a legend. Byte-identical for equal input.
std::string render_svg(const Embedding& e);

}  // namespace relemb
