#include "gaussforge/projection.hpp"

#include <algorithm>
#include <utility>

#include "gaussforge/errors.hpp"
#include "gaussforge/parity.hpp"

namespace gaussforge {

const char* to_string(ProjectionParity parity) {
    switch (parity) {
    case ProjectionParity::Gaussian: return "gaussian";
    case ProjectionParity::Group: return "group";
    }
    fail(ErrorKind::Internal, "projection", "unknown projection parity");
}

namespace {

std::vector<std::uint32_t> odd_labels(const GaussDiagram& d) {
    std::vector<std::uint32_t> out;
    for (const auto& [label, parity] : gaussian_parity(d))
        if (parity != 0) out.push_back(label);
    return out;
}

std::vector<std::uint32_t> nontrivial_labels(const GaussDiagram& d) {
    const ParityGroup group = parity_group(d);
    std::vector<std::uint32_t> out;
    for (std::uint32_t label : d.labels())
        if (!group.class_trivial(label)) out.push_back(label);
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Deleter>
ProjectionTrace iterate_projection(GaussDiagram d, ProjectionParity kind, Deleter deleter) {
    ProjectionTrace trace;
    while (true) {
        std::vector<std::uint32_t> dead = deleter(d);
        if (dead.empty()) {
            trace.stages.push_back({d, kind, {}});
            break;
        }
        GaussDiagram next = delete_chords(d, dead);
        trace.stages.push_back({std::move(d), kind, std::move(dead)});
        d = std::move(next);
    }
    trace.final = trace.stages.back().diagram;
    return trace;
}

} // namespace

GaussDiagram project_gaussian(const GaussDiagram& d) {
    return delete_chords(d, odd_labels(d));
}

ProjectionTrace project_gaussian_stable(const GaussDiagram& d) {
    return iterate_projection(d, ProjectionParity::Gaussian, odd_labels);
}

GaussDiagram project_group(const GaussDiagram& d) {
    return delete_chords(d, nontrivial_labels(d));
}

ProjectionTrace classicalize(const GaussDiagram& d) {
    return iterate_projection(d, ProjectionParity::Group, nontrivial_labels);
}

} // namespace gaussforge
