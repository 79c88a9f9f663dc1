#include <doctest.h>

#include <optional>
#include <random>

#include "gaussforge/codec.hpp"
#include "gaussforge/errors.hpp"
#include "gaussforge/fuzz.hpp"
#include "gaussforge/moves.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/surface.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gaussforge;

namespace {

std::optional<MoveDescriptor> find_move(const GaussDiagram& d, MoveKind kind) {
    for (const auto& mv : enumerate_moves(d, true))
        if (mv.kind == kind) return mv;
    return std::nullopt;
}

} // namespace

TEST_CASE("gaussian parity counts linked chords mod 2") {
    CHECK(gaussian_parity(GaussDiagram()).empty());

    const ParityAssignment k1 = gaussian_parity(parse(fixtures::kK1));
    CHECK(k1.at(1) == 0); // an isolated chord links nothing

    const ParityAssignment t3 = gaussian_parity(parse(fixtures::kT3));
    for (const auto& [label, p] : t3) CHECK(p == 0);

    const ParityAssignment vt = gaussian_parity(parse(fixtures::kVT));
    CHECK(vt.at(1) == 1);
    CHECK(vt.at(2) == 1);

    const ParityAssignment ni4 = gaussian_parity(parse(fixtures::kNI4));
    CHECK(ni4.at(1) == 0);
    CHECK(ni4.at(2) == 0);
    CHECK(ni4.at(3) == 1);
    CHECK(ni4.at(4) == 1);

    const ParityAssignment ins = gaussian_parity(parse(fixtures::kINS));
    CHECK(ins.at(1) == 0);
    CHECK(ins.at(2) == 0);
    CHECK(ins.at(3) == 0);
    CHECK(ins.at(4) == 1);
    CHECK(ins.at(5) == 1);
}

TEST_CASE("parity group of the trefoil is trivial") {
    const ParityGroup g = parity_group(parse(fixtures::kT3));
    CHECK(g.generator_count() == 3);
    CHECK(g.relations().rows() == 5); // one relation per face
    CHECK(g.rank() == 3);
    CHECK(g.dim() == 0);
    for (std::uint32_t label : {1u, 2u, 3u}) CHECK(g.class_trivial(label));
    CHECK(g.classes_equal(1, 3));
    CHECK(g.class_sum_trivial({1, 2, 3}));
}

TEST_CASE("parity group of the virtual trefoil is Z/2") {
    const ParityGroup g = parity_group(parse(fixtures::kVT));
    CHECK(g.generator_count() == 2);
    CHECK(g.dim() == 1);
    CHECK(g.rank() == 1);
    CHECK_FALSE(g.class_trivial(1));
    CHECK_FALSE(g.class_trivial(2));
    CHECK(g.classes_equal(1, 2)); // both map to the one nontrivial class
    CHECK(g.class_sum_trivial({1, 2}));
    CHECK_FALSE(g.class_sum_trivial({1}));
    CHECK(g.class_sum_trivial({}));
}

TEST_CASE("parity group of the connected sum keeps only the virtual chords") {
    const ParityGroup g = parity_group(parse(fixtures::kINS));
    CHECK(g.generator_count() == 5);
    CHECK(g.rank() == 4);
    CHECK(g.dim() == 1);
    for (std::uint32_t label : {1u, 2u, 3u}) CHECK(g.class_trivial(label));
    CHECK_FALSE(g.class_trivial(4));
    CHECK_FALSE(g.class_trivial(5));
    CHECK(g.classes_equal(4, 5));
    CHECK(g.class_sum_trivial({4, 5}));
}

TEST_CASE("parity group of the empty diagram") {
    const ParityGroup g = parity_group(GaussDiagram());
    CHECK(g.generator_count() == 0);
    CHECK(g.dim() == 0);
    CHECK(g.class_sum_trivial({}));
    CHECK_THROWS_AS((void)g.class_trivial(1), Error);
}

TEST_CASE("group membership matches exhaustive row-space enumeration") {
    std::mt19937_64 rng(662931);
    for (int trial = 0; trial < 120; ++trial) {
        const GaussDiagram d = random_diagram(rng, 7);
        if (d.empty()) continue;
        const ParityGroup g = parity_group(d);
        CHECK(g.rank() == oracles::naive_rank(g.relations()));
        const std::size_t n = d.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t label = d.chord(i).label;
            const BitRow e = unit_bit_row(n, i);
            CHECK(g.class_trivial(label) == oracles::naive_in_rowspace(g.relations(), e));
        }
    }
}

TEST_CASE("theorem bound: dim is 2g or 2g-1, and zero exactly at genus zero") {
    std::mt19937_64 rng(88001);
    for (int trial = 0; trial < 400; ++trial) {
        const GaussDiagram d = random_diagram(rng, 9);
        const std::size_t g2 = 2 * genus(d);
        const std::size_t dim = parity_group(d).dim();
        CAPTURE(serialize(d));
        if (g2 == 0) {
            CHECK(dim == 0);
        } else {
            CHECK((dim == g2 || dim + 1 == g2));
            CHECK(dim >= 1);
        }
    }
}

TEST_CASE("axiom checker validates the R1 axiom") {
    const GaussDiagram k1 = parse(fixtures::kK1);
    const auto mv = find_move(k1, MoveKind::R1Remove);
    REQUIRE(mv.has_value());
    const GaussDiagram after = apply_move(k1, *mv);
    for (ParityKind kind : {ParityKind::Gaussian, ParityKind::GaussianWeak, ParityKind::Group}) {
        const AxiomReport rep = check_parity_axioms(k1, *mv, after, kind);
        CHECK(rep.applicable);
        CHECK(rep.correspondence_ok);
        CHECK(rep.move_ok);
        CHECK(rep.passed());
    }
}

TEST_CASE("axiom checker validates R2 and R3 moves") {
    const GaussDiagram r2f = parse(fixtures::kR2F);
    const auto r2 = find_move(r2f, MoveKind::R2Remove);
    REQUIRE(r2.has_value());
    const AxiomReport rep2 =
        check_parity_axioms(r2f, *r2, apply_move(r2f, *r2), ParityKind::Gaussian);
    CHECK(rep2.passed());
    CHECK(rep2.move_ok);

    const GaussDiagram r3f = parse(fixtures::kR3F);
    const auto r3 = find_move(r3f, MoveKind::R3);
    REQUIRE(r3.has_value());
    for (ParityKind kind : {ParityKind::Gaussian, ParityKind::GaussianWeak, ParityKind::Group}) {
        const AxiomReport rep = check_parity_axioms(r3f, *r3, apply_move(r3f, *r3), kind);
        CHECK(rep.applicable);
        CHECK(rep.passed());
    }
}

TEST_CASE("axiom checker rejects a mismatched after diagram") {
    const GaussDiagram k1 = parse(fixtures::kK1);
    const auto mv = find_move(k1, MoveKind::R1Remove);
    REQUIRE(mv.has_value());
    CHECK_THROWS_AS(
        (void)check_parity_axioms(k1, *mv, k1, ParityKind::Gaussian), Error);
}

TEST_CASE("axiom checker flags a broken correspondence") {
    const GaussDiagram vt = parse(fixtures::kVT);
    auto mv = find_move(vt, MoveKind::R1Add);
    REQUIRE(mv.has_value());
    const GaussDiagram after = apply_move(vt, *mv);
    MoveDescriptor doctored = *mv;
    doctored.correspondence.clear();
    const AxiomReport rep = check_parity_axioms(vt, doctored, after, ParityKind::Gaussian);
    CHECK_FALSE(rep.correspondence_ok);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("group axiom is not applicable across genus changes") {
    // adding a kink keeps the genus; an R2 pair across interleaved arcs can
    // raise it, and the checker must bow out instead of reporting a violation
    const GaussDiagram k1 = parse(fixtures::kK1);
    MoveDescriptor add;
    bool found_genus_change = false;
    for (const auto& mv : enumerate_moves(k1, true)) {
        if (mv.kind != MoveKind::R2Add) continue;
        const GaussDiagram after = apply_move(k1, mv);
        if (genus(after) != genus(k1)) {
            add = mv;
            found_genus_change = true;
            break;
        }
    }
    REQUIRE(found_genus_change);
    const AxiomReport rep =
        check_parity_axioms(k1, add, apply_move(k1, add), ParityKind::Group);
    CHECK_FALSE(rep.applicable);
    CHECK(rep.passed()); // not applicable is not a failure
}

TEST_CASE("axioms hold across random move sequences") {
    std::mt19937_64 rng(52118);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        GaussDiagram d = random_diagram(rng, 8);
        const auto mv = random_move(rng, d, 8);
        if (!mv) continue;
        const GaussDiagram after = apply_move(d, *mv);
        for (ParityKind kind : {ParityKind::Gaussian, ParityKind::Group}) {
            const AxiomReport rep = check_parity_axioms(d, *mv, after, kind);
            CAPTURE(serialize(d));
            CAPTURE(mv->describe());
            CHECK(rep.correspondence_ok);
            CHECK(rep.move_ok);
        }
        ++checked;
    }
    CHECK(checked > 300);
}
