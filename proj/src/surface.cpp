#include "gaussforge/surface.hpp"

#include <map>

#include "gaussforge/errors.hpp"

namespace gaussforge {

namespace {

constexpr const char* kModule = "surface";

std::uint32_t dart(std::uint32_t arc, bool head) {
    return 2 * arc + (head ? 1u : 0u);
}

} // namespace

CrossingEnds crossing_ends(const GaussDiagram& d, std::size_t chord_index) {
    const std::uint32_t m = static_cast<std::uint32_t>(d.endpoints().size());
    const Chord& c = d.chord(chord_index);
    CrossingEnds e;
    e.over_in = dart((c.over_pos + m - 1) % m, true);
    e.over_out = dart(c.over_pos, false);
    e.under_in = dart((c.under_pos + m - 1) % m, true);
    e.under_out = dart(c.under_pos, false);
    return e;
}

RotationSystem rotation_system(const GaussDiagram& d) {
    RotationSystem rs;
    rs.ccw.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const CrossingEnds e = crossing_ends(d, i);
        if (d.chord(i).sign > 0)
            rs.ccw.push_back({e.over_in, e.under_in, e.over_out, e.under_out});
        else
            rs.ccw.push_back({e.over_in, e.under_out, e.over_out, e.under_in});
    }
    return rs;
}

std::vector<PastedCycle> boundary_cycles(const GaussDiagram& d) {
    if (d.empty()) return {PastedCycle{}, PastedCycle{}};

    const std::size_t darts = 4 * d.size();
    const RotationSystem rs = rotation_system(d);

    // sigma: next band end counterclockwise on the same disc
    std::vector<std::uint32_t> sigma(darts, 0);
    std::vector<std::uint32_t> owner(darts, 0); // dart -> chord index
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& r = rs.ccw[i];
        for (std::size_t k = 0; k < 4; ++k) {
            sigma[r[k]] = r[(k + 1) % 4];
            owner[r[k]] = static_cast<std::uint32_t>(i);
        }
    }

    // faces are the orbits of d -> sigma(d ^ 1)
    std::vector<PastedCycle> cycles;
    std::vector<bool> seen(darts, false);
    for (std::uint32_t start = 0; start < darts; ++start) {
        if (seen[start]) continue;
        PastedCycle cycle;
        std::map<std::uint32_t, std::uint32_t> counts;
        std::uint32_t cur = start;
        do {
            seen[cur] = true;
            cycle.darts.push_back(cur);
            ++counts[d.chord(owner[cur]).label];
            cur = sigma[cur ^ 1];
        } while (cur != start);
        cycle.incidence.assign(counts.begin(), counts.end());
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

SurfaceData surface_data(const GaussDiagram& d) {
    SurfaceData s;
    s.cycles = boundary_cycles(d);
    s.face_count = s.cycles.size();
    const long twice_genus = 2 + static_cast<long>(d.size()) - static_cast<long>(s.face_count);
    if (twice_genus < 0 || twice_genus % 2 != 0)
        fail(ErrorKind::InternalParity, kModule,
             "face count " + std::to_string(s.face_count) + " does not fit chord count " +
                 std::to_string(d.size()) + "; Euler count is broken");
    s.genus = static_cast<std::size_t>(twice_genus / 2);
    return s;
}

std::size_t genus(const GaussDiagram& d) {
    return surface_data(d).genus;
}

bool is_classical_diagram(const GaussDiagram& d) {
    return genus(d) == 0;
}

} // namespace gaussforge
