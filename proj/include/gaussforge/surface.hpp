#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gaussforge/diagram.hpp"

namespace gaussforge {

// Band-surface plumbing. Each of the 2n core arcs (arc i runs from endpoint
// position i to i+1) is a band; each crossing is a disc with four band ends.
// An arc end ("dart") is encoded as 2*arc + (1 if it is the head end, i.e. the
// end at position i+1). The partner end of the same arc is dart ^ 1.

struct CrossingEnds {
    std::uint32_t over_in = 0;
    std::uint32_t over_out = 0;
    std::uint32_t under_in = 0;
    std::uint32_t under_out = 0;
};

CrossingEnds crossing_ends(const GaussDiagram& d, std::size_t chord_index);

// Counterclockwise order of the four band ends on each crossing disc:
// +1 chords read (over-in, under-in, over-out, under-out), -1 chords read
// (over-in, under-out, over-out, under-in).
struct RotationSystem {
    std::vector<std::array<std::uint32_t, 4>> ccw; // by chord index
};

RotationSystem rotation_system(const GaussDiagram& d);

// One boundary component of the banded surface. `incidence` counts the corner
// visits at each crossing, keyed by chord label, sorted by label.
struct PastedCycle {
    std::vector<std::uint32_t> darts;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> incidence;
};

// The empty diagram contributes two boundary circles by convention.
std::vector<PastedCycle> boundary_cycles(const GaussDiagram& d);

struct SurfaceData {
    std::vector<PastedCycle> cycles;
    std::size_t face_count = 0;
    std::size_t genus = 0;
};

SurfaceData surface_data(const GaussDiagram& d);
std::size_t genus(const GaussDiagram& d);
bool is_classical_diagram(const GaussDiagram& d); // genus == 0

} // namespace gaussforge
