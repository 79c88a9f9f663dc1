#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gaussforge/diagram.hpp"
#include "gaussforge/moves.hpp"

namespace gaussforge {

struct FuzzConfig {
    std::uint64_t seed_base = 1;
    std::size_t seeds = 100;
    std::size_t max_chords = 8;
    std::size_t move_depth = 2;
    std::vector<std::string> checks; // empty means every registered check
};

struct FuzzFailure {
    std::string check;
    std::uint64_t seed = 0;
    std::string diagram_code;
    std::string move; // empty for checks that do not apply moves
    std::string message;
};

struct FuzzReport {
    std::size_t seeds_run = 0;
    std::size_t checks_run = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const { return failures.empty(); }
};

std::vector<std::string> fuzz_check_names();

// Uniform random pairing of 2n endpoints with random roles and signs,
// n uniform in [0, max_chords]. Only the engine's own output feeds the
// distributions, so identical seeding reproduces identical diagrams.
GaussDiagram random_diagram(std::mt19937_64& rng, std::size_t max_chords);

// A uniformly chosen applicable move; increasing moves are offered only while
// the diagram is below max_chords. Empty when no move applies.
std::optional<MoveDescriptor> random_move(std::mt19937_64& rng, const GaussDiagram& d,
                                          std::size_t max_chords);

FuzzReport run_fuzz(const FuzzConfig& config);

} // namespace gaussforge
