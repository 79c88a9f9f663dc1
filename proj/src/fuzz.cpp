#include "gaussforge/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gaussforge/codec.hpp"
#include "gaussforge/errors.hpp"
#include "gaussforge/invariants.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/projection.hpp"
#include "gaussforge/surface.hpp"

namespace gaussforge {

namespace {

// Hand-rolled draws: the standard distributions are implementation-defined,
// and reproducibility from the seed alone is part of the contract.
std::size_t pick(std::mt19937_64& rng, std::size_t count) {
    return static_cast<std::size_t>(rng() % count);
}

std::optional<FuzzFailure> violation(const GaussDiagram& d, std::string move, std::string message) {
    FuzzFailure f;
    f.diagram_code = serialize(d);
    f.move = std::move(move);
    f.message = std::move(message);
    return f;
}

using CheckFn = std::function<std::optional<FuzzFailure>(std::mt19937_64&, const FuzzConfig&)>;

std::optional<FuzzFailure> check_axioms(std::mt19937_64& rng, const FuzzConfig& cfg,
                                        ParityKind kind) {
    GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const std::size_t depth = std::max<std::size_t>(cfg.move_depth, 1);
    for (std::size_t step = 0; step < depth; ++step) {
        const std::optional<MoveDescriptor> mv = random_move(rng, d, cfg.max_chords);
        if (!mv) break;
        GaussDiagram after = apply_move(d, *mv);
        const AxiomReport report = check_parity_axioms(d, *mv, after, kind);
        if (!report.passed()) return violation(d, mv->describe(), report.detail);
        d = std::move(after);
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_thm41_dim(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const std::size_t g = genus(d);
    const std::size_t dim = parity_group(d).dim();
    const bool ok = g == 0 ? dim == 0 : (dim == 2 * g || dim + 1 == 2 * g);
    if (!ok) {
        std::ostringstream msg;
        msg << "group dimension " << dim << " incompatible with genus " << g;
        return violation(d, "", msg.str());
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_classicalize(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const ProjectionTrace trace = classicalize(d);
    if (genus(trace.final) != 0)
        return violation(d, "", "classicalize output has positive genus");
    if (!is_smaller(trace.final, d))
        return violation(d, "", "classicalize output is not a subdiagram of the input");
    const ParityGroup group = parity_group(d);
    bool all_trivial = true;
    for (std::uint32_t l : d.labels())
        if (!group.class_trivial(l)) all_trivial = false;
    const bool fixed = trace.final == d;
    if (fixed != (genus(d) == 0 && all_trivial))
        return violation(d, "", "classicalize fixed point does not match the classical test");
    const ProjectionTrace again = classicalize(trace.final);
    if (again.stages.size() != 1 || !again.stages.front().deleted.empty())
        return violation(d, "", "classicalize output is not a fixed point");
    return std::nullopt;
}

std::optional<FuzzFailure> check_monotonicity(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const std::size_t bridges = bridge_count(d);
    const GaussDiagram outs[3] = {project_gaussian(d), project_group(d), classicalize(d).final};
    for (const GaussDiagram& out : outs) {
        if (out.size() > d.size())
            return violation(d, "", "projection increased the crossing count");
        if (bridge_count(out) > bridges)
            return violation(d, "", "projection increased the bridge count");
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_well_defined(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const std::size_t cap = std::min<std::size_t>(cfg.max_chords, 8);
    GaussDiagram d = random_diagram(rng, cap);
    const std::size_t depth = std::max<std::size_t>(cfg.move_depth, 1);
    for (std::size_t step = 0; step < depth; ++step) {
        const std::optional<MoveDescriptor> mv = random_move(rng, d, cap);
        if (!mv) break;
        GaussDiagram after = apply_move(d, *mv);
        const GaussDiagram pd = project_gaussian(d);
        const GaussDiagram pa = project_gaussian(after);
        if (f_polynomial(pd) != f_polynomial(pa))
            return violation(d, mv->describe(), "projected f polynomial changed under a move");
        if (odd_writhe(pd) != odd_writhe(pa))
            return violation(d, mv->describe(), "projected odd writhe changed under a move");
        d = std::move(after);
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_move_invariance(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const std::size_t cap = std::min<std::size_t>(cfg.max_chords, 8);
    GaussDiagram d = random_diagram(rng, cap);
    const std::size_t depth = std::max<std::size_t>(cfg.move_depth, 1);
    for (std::size_t step = 0; step < depth; ++step) {
        const std::optional<MoveDescriptor> mv = random_move(rng, d, cap);
        if (!mv) break;
        GaussDiagram after = apply_move(d, *mv);
        if (f_polynomial(d) != f_polynomial(after))
            return violation(d, mv->describe(), "f polynomial changed under a move");
        if (odd_writhe(d) != odd_writhe(after))
            return violation(d, mv->describe(), "odd writhe changed under a move");
        const std::size_t gb = genus(d);
        const std::size_t ga = genus(after);
        if (mv->kind == MoveKind::R2Add || mv->kind == MoveKind::R2Remove) {
            if (gb + 1 < ga || ga + 1 < gb)
                return violation(d, mv->describe(), "genus changed by more than one under a poke");
        } else if (gb != ga) {
            return violation(d, mv->describe(), "genus changed under a twist or slide move");
        }
        d = std::move(after);
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_classical_even(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    if (genus(d) != 0) return std::nullopt;
    for (const auto& [label, parity] : gaussian_parity(d))
        if (parity != 0)
            return violation(d, "", "genus-0 diagram has odd chord " + std::to_string(label));
    if (odd_writhe(d) != 0)
        return violation(d, "", "genus-0 diagram has nonzero odd writhe");
    return std::nullopt;
}

std::optional<FuzzFailure> check_surface_sanity(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const SurfaceData s = surface_data(d);
    if ((s.face_count + d.size()) % 2 != 0)
        return violation(d, "", "face count and chord count have the same parity defect");
    if (s.face_count < (d.empty() ? 2u : 1u))
        return violation(d, "", "too few boundary cycles");
    std::size_t corners = 0;
    for (const PastedCycle& c : s.cycles)
        for (const auto& [label, count] : c.incidence) {
            (void)label;
            corners += count;
        }
    if (corners != 4 * d.size())
        return violation(d, "", "incidence corners do not total four per crossing");
    const ParityGroup group = parity_group(d);
    for (std::size_t c = 0; c < group.generator_count(); ++c) {
        std::size_t ones = 0;
        for (std::size_t r = 0; r < group.relations().rows(); ++r)
            if (group.relations().get(r, c)) ++ones;
        if (ones % 2 != 0)
            return violation(d, "", "relation rows do not sum to zero");
    }
    return std::nullopt;
}

std::optional<FuzzFailure> check_diagram_props(std::mt19937_64& rng, const FuzzConfig& cfg) {
    const GaussDiagram d = random_diagram(rng, cfg.max_chords);
    const CanonicalCode code = canonical(d);
    if (!(code.to_diagram() == d))
        return violation(d, "", "canonical code does not rebuild the diagram");
    if (canonical(code.to_diagram()).to_string() != code.to_string())
        return violation(d, "", "canonical form is not idempotent");
    if (!(parse(serialize(d)) == d))
        return violation(d, "", "serialize/parse round trip changed the diagram");
    if (!identical(GaussDiagram::from_endpoint_tokens(d.endpoint_tokens()), d))
        return violation(d, "", "endpoint token round trip changed the diagram");
    if (!delete_chords(d, d.labels()).empty())
        return violation(d, "", "deleting every chord left something behind");
    const std::size_t arcs = d.empty() ? 1 : d.endpoints().size();
    if (!identical(connected_sum(d, GaussDiagram(), pick(rng, arcs)), d))
        return violation(d, "", "connected sum with the empty diagram changed the diagram");
    const BitMatrix inter = interlacement(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (inter.get(i, i))
            return violation(d, "", "interlacement diagonal is not zero");
        for (std::size_t j = 0; j < d.size(); ++j)
            if (inter.get(i, j) != inter.get(j, i))
                return violation(d, "", "interlacement matrix is not symmetric");
    }
    for (std::uint32_t a : d.labels())
        for (std::uint32_t b : d.labels())
            if (a != b && linked(d, a, b) != linked(d, b, a))
                return violation(d, "", "linking relation is not symmetric");
    return std::nullopt;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"parity-axioms",
         [](std::mt19937_64& rng, const FuzzConfig& cfg) {
             return check_axioms(rng, cfg, ParityKind::Gaussian);
         }},
        {"group-axioms",
         [](std::mt19937_64& rng, const FuzzConfig& cfg) {
             return check_axioms(rng, cfg, ParityKind::Group);
         }},
        {"thm41-dim", check_thm41_dim},
        {"classicalize", check_classicalize},
        {"monotonicity", check_monotonicity},
        {"well-defined", check_well_defined},
        {"move-invariance", check_move_invariance},
        {"classical-even", check_classical_even},
        {"surface-sanity", check_surface_sanity},
        {"diagram-props", check_diagram_props},
    };
    return checks;
}

} // namespace

std::vector<std::string> fuzz_check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) {
        (void)fn;
        names.push_back(name);
    }
    return names;
}

GaussDiagram random_diagram(std::mt19937_64& rng, std::size_t max_chords) {
    const std::size_t n = pick(rng, max_chords + 1);
    std::vector<std::uint32_t> positions(2 * n);
    std::iota(positions.begin(), positions.end(), 0u);
    for (std::size_t i = positions.size(); i > 1; --i)
        std::swap(positions[i - 1], positions[pick(rng, i)]);
    std::vector<Chord> chords;
    chords.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        chords.push_back(Chord{static_cast<std::uint32_t>(i + 1), positions[2 * i],
                               positions[2 * i + 1], (rng() & 1) != 0 ? 1 : -1});
    return GaussDiagram::from_chords(chords);
}

std::optional<MoveDescriptor> random_move(std::mt19937_64& rng, const GaussDiagram& d,
                                          std::size_t max_chords) {
    const std::vector<MoveDescriptor> moves = enumerate_moves(d, d.size() < max_chords);
    if (moves.empty()) return std::nullopt;
    return moves[pick(rng, moves.size())];
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    const auto& checks = registry();
    std::vector<std::size_t> selected;
    if (config.checks.empty()) {
        for (std::size_t i = 0; i < checks.size(); ++i) selected.push_back(i);
    } else {
        for (const std::string& name : config.checks) {
            bool found = false;
            for (std::size_t i = 0; i < checks.size(); ++i)
                if (checks[i].first == name) {
                    selected.push_back(i);
                    found = true;
                }
            if (!found)
                fail(ErrorKind::UnknownLabel, "fuzz", "unknown check '" + name + "'");
        }
    }

    FuzzReport report;
    report.seeds_run = config.seeds;
    for (std::uint64_t seed = 0; seed < config.seeds; ++seed) {
        for (std::size_t idx : selected) {
            // seed each (check, seed) pair on its own so the verdict for one
            // check never depends on which other checks were selected
            std::seed_seq seq{config.seed_base, static_cast<std::uint64_t>(idx), seed};
            std::mt19937_64 rng(seq);
            ++report.checks_run;
            std::optional<FuzzFailure> failure = checks[idx].second(rng, config);
            if (failure) {
                failure->check = checks[idx].first;
                failure->seed = seed;
                report.failures.push_back(std::move(*failure));
            }
        }
    }
    return report;
}

} // namespace gaussforge
