#include <doctest.h>

#include <random>

#include "gaussforge/codec.hpp"
#include "gaussforge/fuzz.hpp"
#include "gaussforge/invariants.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/projection.hpp"
#include "gaussforge/surface.hpp"
#include "fixtures.hpp"

using namespace gaussforge;

namespace {

void check_trace_shape(const GaussDiagram& input, const ProjectionTrace& trace) {
    REQUIRE(!trace.stages.empty());
    CHECK(identical(trace.stages.front().diagram, input));
    CHECK(trace.stages.back().deleted.empty());
    CHECK(identical(trace.stages.back().diagram, trace.final));
    for (std::size_t k = 0; k + 1 < trace.stages.size(); ++k) {
        CHECK(!trace.stages[k].deleted.empty());
        CHECK(identical(delete_chords(trace.stages[k].diagram, trace.stages[k].deleted),
                        trace.stages[k + 1].diagram));
    }
}

} // namespace

TEST_CASE("gaussian projection deletes the odd chords") {
    CHECK(project_gaussian(GaussDiagram()).empty());
    CHECK(project_gaussian(parse(fixtures::kT3)) == parse(fixtures::kT3));
    CHECK(project_gaussian(parse(fixtures::kVT)).empty());
    CHECK(project_gaussian(parse(fixtures::kNI4)) == parse(fixtures::kVT));
    CHECK(serialize(project_gaussian(parse(fixtures::kNI4))) == fixtures::kVT);
    CHECK(project_gaussian(parse(fixtures::kINS)) == parse(fixtures::kT3));
}

TEST_CASE("single gaussian projection need not be stable") {
    const GaussDiagram once = project_gaussian(parse(fixtures::kNI4));
    CHECK(odd_writhe(once) != 0); // survivors became odd
    CHECK_FALSE(project_gaussian(once) == once);
}

TEST_CASE("stable gaussian projection iterates to a fixed point") {
    const GaussDiagram ni4 = parse(fixtures::kNI4);
    const ProjectionTrace trace = project_gaussian_stable(ni4);
    check_trace_shape(ni4, trace);
    REQUIRE(trace.stages.size() == 3);
    CHECK(trace.stages[0].parity == ProjectionParity::Gaussian);
    CHECK(trace.stages[1].diagram == parse(fixtures::kVT));
    CHECK(trace.final.empty());
    for (const auto& [label, p] : gaussian_parity(trace.final)) CHECK(p == 0);

    const ProjectionTrace t3 = project_gaussian_stable(parse(fixtures::kT3));
    CHECK(t3.stages.size() == 1);
    CHECK(t3.final == parse(fixtures::kT3));
}

TEST_CASE("group projection deletes nontrivial classes") {
    CHECK(project_group(GaussDiagram()).empty());
    CHECK(project_group(parse(fixtures::kT3)) == parse(fixtures::kT3));
    CHECK(project_group(parse(fixtures::kVT)).empty());
    CHECK(project_group(parse(fixtures::kINS)) == parse(fixtures::kT3));
    CHECK(serialize(project_group(parse(fixtures::kINS))) == fixtures::kT3);
}

TEST_CASE("classicalize reaches a classical diagram") {
    const GaussDiagram ins = parse(fixtures::kINS);
    const ProjectionTrace trace = classicalize(ins);
    check_trace_shape(ins, trace);
    REQUIRE(trace.stages.size() == 2);
    CHECK(trace.stages[0].parity == ProjectionParity::Group);
    CHECK(trace.stages[0].deleted == std::vector<std::uint32_t>{4, 5});
    CHECK(trace.final == parse(fixtures::kT3));
    CHECK(is_classical_diagram(trace.final));
    CHECK(f_polynomial(trace.final) == f_polynomial(parse(fixtures::kT3)));

    CHECK(classicalize(parse(fixtures::kT3)).stages.size() == 1);
    CHECK(classicalize(GaussDiagram()).final.empty());
    CHECK(classicalize(parse(fixtures::kVT)).final.empty());
}

TEST_CASE("projections only remove chords") {
    std::mt19937_64 rng(192837);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussDiagram d = random_diagram(rng, 9);
        CAPTURE(serialize(d));
        const GaussDiagram pg = project_gaussian(d);
        const GaussDiagram pq = project_group(d);
        const GaussDiagram cl = classicalize(d).final;
        for (const GaussDiagram* p : {&pg, &pq, &cl}) {
            CHECK(p->size() <= d.size());
            CHECK(is_smaller(*p, d));
            CHECK(bridge_count(*p) <= bridge_count(d));
        }
        CHECK(is_classical_diagram(cl));
        CHECK(parity_group(cl).dim() == 0);
        // fixed point: classicalizing again changes nothing
        CHECK(identical(classicalize(cl).final, cl));
        CHECK(classicalize(cl).stages.size() == 1);
    }
}

TEST_CASE("classical diagrams are fixed by every projection") {
    std::mt19937_64 rng(411559);
    int classical_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const GaussDiagram d = random_diagram(rng, 6);
        if (!is_classical_diagram(d)) continue;
        ++classical_seen;
        CAPTURE(serialize(d));
        CHECK(identical(project_gaussian(d), d));
        CHECK(identical(project_group(d), d));
        CHECK(identical(classicalize(d).final, d));
    }
    CHECK(classical_seen > 20);
}
