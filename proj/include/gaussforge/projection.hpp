#pragma once

#include <cstdint>
#include <vector>

#include "gaussforge/diagram.hpp"

namespace gaussforge {

enum class ProjectionParity { Gaussian, Group };

const char* to_string(ProjectionParity parity);

struct ProjectionStage {
    GaussDiagram diagram;
    ProjectionParity parity;
    std::vector<std::uint32_t> deleted; // labels removed to reach the next stage
};

// Stage k+1's diagram is stage k's diagram minus stage k's deleted chords; the
// last stage deletes nothing and its diagram equals `final`.
struct ProjectionTrace {
    std::vector<ProjectionStage> stages;
    GaussDiagram final;
};

// Deletes every chord that is odd under the Gaussian parity.
GaussDiagram project_gaussian(const GaussDiagram& d);

// Iterates project_gaussian to a fixed point (the single step is not
// idempotent: deleting chords can flip the parity of survivors).
ProjectionTrace project_gaussian_stable(const GaussDiagram& d);

// Deletes every chord whose parity-group class is nontrivial.
GaussDiagram project_group(const GaussDiagram& d);

// Iterates project_group to a fixed point. The result has every class
// trivial, hence parity-group dimension 0, hence genus 0.
ProjectionTrace classicalize(const GaussDiagram& d);

} // namespace gaussforge
