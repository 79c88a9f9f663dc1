#pragma once

#include <string>

#include "gaussforge/diagram.hpp"

namespace gaussforge {

// Chord-diagram picture: core circle, endpoints equally spaced by position
// index, one straight chord per crossing with the arrowhead at the under
// endpoint, colored by sign. Output is deterministic byte for byte.
std::string render_svg(const GaussDiagram& d);

void render_svg_file(const GaussDiagram& d, const std::string& path);

} // namespace gaussforge
