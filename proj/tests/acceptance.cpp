// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

#include "gaussforge/codec.hpp"
#include "gaussforge/diagram.hpp"
#include "gaussforge/fuzz.hpp"
#include "gaussforge/invariants.hpp"
#include "gaussforge/moves.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/projection.hpp"
#include "gaussforge/surface.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gaussforge;

namespace {

LaurentPolynomial trefoil_f() {
    LaurentPolynomial p;
    p += LaurentPolynomial::monomial(1, -4);
    p += LaurentPolynomial::monomial(1, -12);
    p += LaurentPolynomial::monomial(-1, -16);
    return p;
}

bool surface_matches_oracle(const GaussDiagram& d) {
    const SurfaceData s = surface_data(d);
    const oracles::NaiveSurface ref = oracles::naive_surface(d);
    if (s.face_count != ref.faces || s.genus != ref.genus) return false;
    std::vector<std::map<std::uint32_t, std::size_t>> got;
    for (const auto& c : s.cycles) {
        std::map<std::uint32_t, std::size_t> m;
        for (const auto& [label, count] : c.incidence) m[label] = count;
        got.push_back(std::move(m));
    }
    auto want = ref.incidence;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool all_even_and_no_odd_writhe(const GaussDiagram& d) {
    if (odd_writhe(d) != 0) return false;
    for (const auto& [label, parity] : gaussian_parity(d))
        if (parity != 0) return false;
    return true;
}

// 1. The Gaussian projection sends the pinned 4-chord example to the virtual
//    trefoil and the virtual trefoil to the empty diagram.
bool criterion_gaussian_examples() {
    const GaussDiagram ni4 = parse(fixtures::kNI4);
    const GaussDiagram once = project_gaussian(ni4);
    bool ok = once == parse(fixtures::kVT);
    ok = ok && serialize(once) == fixtures::kVT;
    ok = ok && project_gaussian(parse(fixtures::kVT)).empty();
    ok = ok && project_gaussian_stable(ni4).final.empty();
    return ok;
}

// 2. The Gaussian parity axioms hold strictly on 1000 random moves.
bool criterion_gaussian_axioms() {
    std::mt19937_64 rng(1101);
    std::size_t pairs = 0;
    for (std::size_t trial = 0; trial < 8000 && pairs < 1000; ++trial) {
        const GaussDiagram d = random_diagram(rng, 10);
        const auto mv = random_move(rng, d, 10);
        if (!mv) continue;
        const GaussDiagram after = apply_move(d, *mv);
        const AxiomReport rep = check_parity_axioms(d, *mv, after, ParityKind::Gaussian);
        if (!rep.applicable || !rep.correspondence_ok || !rep.move_ok) return false;
        ++pairs;
    }
    return pairs >= 1000;
}

// 3. The parity-group dimension is 2g or 2g-1, zero exactly at genus zero.
bool criterion_group_dimension() {
    if (parity_group(parse(fixtures::kT3)).dim() != 0) return false;
    if (parity_group(parse(fixtures::kVT)).dim() != 1) return false;
    std::mt19937_64 rng(2202);
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const GaussDiagram d = random_diagram(rng, 9);
        const std::size_t g2 = 2 * genus(d);
        const std::size_t dim = parity_group(d).dim();
        if (g2 == 0 && dim != 0) return false;
        if (g2 != 0 && dim != g2 && dim + 1 != g2) return false;
        if ((dim == 0) != (g2 == 0)) return false;
    }
    return true;
}

// 4. classicalize always lands on a genus-zero subdiagram and fixes exactly
//    the classical diagrams.
bool criterion_classicalize() {
    std::mt19937_64 rng(3303);
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const GaussDiagram d = random_diagram(rng, 8);
        const ProjectionTrace trace = classicalize(d);
        if (!is_classical_diagram(trace.final)) return false;
        if (parity_group(trace.final).dim() != 0) return false;
        if (!is_smaller(trace.final, d)) return false;
        const bool fixed = trace.stages.size() == 1;
        if (fixed != is_classical_diagram(d)) return false;
        if (fixed && !identical(trace.final, d)) return false;
    }
    return true;
}

// 5. The group projection splits trefoil # virtual trefoil back into the
//    trefoil, whose f polynomial matches the pinned value and the independent
//    state-sum enumerator.
bool criterion_connected_sum_split() {
    const GaussDiagram t3 = parse(fixtures::kT3);
    const GaussDiagram ins = connected_sum(t3, parse(fixtures::kVT), 5);
    if (!identical(ins, parse(fixtures::kINS))) return false;
    const GaussDiagram split = project_group(ins);
    bool ok = split == t3 && serialize(split) == fixtures::kT3;
    const GaussDiagram settled = classicalize(ins).final;
    const LaurentPolynomial want = trefoil_f();
    ok = ok && f_polynomial(settled) == want;
    ok = ok && f_polynomial(t3) == want;
    ok = ok && oracles::naive_f(t3) == want;
    ok = ok && oracles::naive_f(settled) == want;
    return ok;
}

// 6. No projection ever increases the crossing count or the bridge count.
bool criterion_monotone() {
    std::mt19937_64 rng(4404);
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const GaussDiagram d = random_diagram(rng, 9);
        const GaussDiagram imgs[3] = {project_gaussian(d), project_group(d),
                                      classicalize(d).final};
        for (const GaussDiagram& p : imgs) {
            if (p.size() > d.size()) return false;
            if (bridge_count(p) > bridge_count(d)) return false;
        }
    }
    return true;
}

// 7. The f polynomial and odd writhe of the Gaussian projection are invariant
//    under moves on the source diagram (500 pairs).
bool criterion_projection_well_defined() {
    std::mt19937_64 rng(5505);
    std::size_t pairs = 0;
    for (std::size_t trial = 0; trial < 5000 && pairs < 500; ++trial) {
        const GaussDiagram d = random_diagram(rng, 8);
        const auto mv = random_move(rng, d, 8);
        if (!mv) continue;
        const GaussDiagram after = apply_move(d, *mv);
        const GaussDiagram pd = project_gaussian(d);
        const GaussDiagram pa = project_gaussian(after);
        if (f_polynomial(pd) != f_polynomial(pa)) return false;
        if (odd_writhe(pd) != odd_writhe(pa)) return false;
        ++pairs;
    }
    return pairs >= 500;
}

// 8. Faces, genus and corner incidences agree with the boundary-point tracer.
bool criterion_surface_oracle() {
    if (!surface_matches_oracle(GaussDiagram())) return false;
    const SurfaceData t3 = surface_data(parse(fixtures::kT3));
    if (t3.face_count != 5 || t3.genus != 0) return false;
    const SurfaceData vt = surface_data(parse(fixtures::kVT));
    if (vt.face_count != 2 || vt.genus != 1) return false;
    for (const char* code : {fixtures::kT3, fixtures::kT3M, fixtures::kVT, fixtures::kK1,
                             fixtures::kR2F, fixtures::kR3F, fixtures::kNI4, fixtures::kINS})
        if (!surface_matches_oracle(parse(code))) return false;
    std::mt19937_64 rng(6606);
    for (std::size_t trial = 0; trial < 500; ++trial)
        if (!surface_matches_oracle(random_diagram(rng, 8))) return false;
    return true;
}

// 9. f survives 1000 applied moves; R1 and R3 also preserve the genus.
bool criterion_move_invariance() {
    std::mt19937_64 rng(7707);
    std::size_t applied = 0;
    GaussDiagram d = random_diagram(rng, 8);
    while (applied < 1000) {
        const auto mv = random_move(rng, d, 8);
        if (!mv) {
            d = random_diagram(rng, 8);
            continue;
        }
        const GaussDiagram after = apply_move(d, *mv);
        if (f_polynomial(d) != f_polynomial(after)) return false;
        if (mv->kind != MoveKind::R2Add && mv->kind != MoveKind::R2Remove &&
            genus(d) != genus(after))
            return false;
        ++applied;
        // walk a few moves deep, then restart from a fresh diagram
        d = (applied % 4 == 0) ? random_diagram(rng, 8) : after;
    }
    return true;
}

// 10. Genus-zero diagrams carry only even chords and zero odd writhe.
bool criterion_classical_even() {
    std::mt19937_64 rng(8808);
    std::size_t classical_seen = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const GaussDiagram d = random_diagram(rng, 9);
        if (is_classical_diagram(d)) {
            ++classical_seen;
            if (!all_even_and_no_odd_writhe(d)) return false;
        }
        // classicalized images are genus zero by construction
        if (!all_even_and_no_odd_writhe(classicalize(d).final)) return false;
    }
    return classical_seen >= 100;
}

} // namespace

int main() {
    struct Criterion {
        const char* text;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"Gaussian projection matches the pinned examples", criterion_gaussian_examples},
        {"Gaussian parity axioms hold on 1000 random moves", criterion_gaussian_axioms},
        {"parity-group dimension is 2g or 2g-1, zero exactly at genus zero",
         criterion_group_dimension},
        {"classicalize reaches genus zero and fixes exactly the classical diagrams",
         criterion_classicalize},
        {"group projection splits the connected sum and recovers the trefoil f polynomial",
         criterion_connected_sum_split},
        {"projections never increase crossing or bridge counts", criterion_monotone},
        {"projected f polynomial and odd writhe are move-invariant", criterion_projection_well_defined},
        {"band surface agrees with the boundary-point tracer", criterion_surface_oracle},
        {"f polynomial survives 1000 moves, R1 and R3 preserve genus", criterion_move_invariance},
        {"genus-zero diagrams have even chords and zero odd writhe", criterion_classical_even},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("[FAIL] criterion %d: %s (exception: %s)\n", index, c.text, e.what());
            ++failures;
            continue;
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index, c.text);
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %d criteria failed\n", failures, index);
        return 1;
    }
    std::printf("all %d criteria passed\n", index);
    return 0;
}
