#pragma once

#include <iosfwd>
#include <string>

#include "onion/layers.hpp"

namespace onion {

// Renders the layers as nested outlines, one stroke color per depth, with a
// dot per point; one- and two-point layers degrade to a dot or a segment.
void writeLayersSvg(std::ostream& out, const LayerSet& ls);
void writeLayersSvgFile(const std::string& path, const LayerSet& ls);

}  // namespace onion
