#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaussforge/diagram.hpp"

namespace gaussforge {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

const char* to_string(MoveKind kind);
MoveKind inverse_kind(MoveKind kind);

// Arc g is the gap right after endpoint position g (the empty diagram has the
// single arc 0), matching the connected_sum convention.

struct R1AddSite {
    std::uint32_t arc = 0;
    int sign = +1;
    bool over_first = true;
};

struct R1RemoveSite {
    std::uint32_t label = 0;
};

// Both tails go into over_arc, both heads into under_arc. `parallel` repeats
// the tail order in the head pair; the second chord gets -lead_sign.
struct R2AddSite {
    std::uint32_t over_arc = 0;
    std::uint32_t under_arc = 0;
    bool parallel = true;
    int lead_sign = +1;
};

struct R2RemoveSite {
    std::uint32_t label_a = 0;
    std::uint32_t label_b = 0;
};

// Triangle site. pair_start[k] is the first position of the adjacent endpoint
// pair lying on the top / middle / bottom strand (k = 0,1,2); the chords are
// named by the strands they join. Applying the move swaps all three pairs.
struct R3Site {
    std::array<std::uint32_t, 3> pair_start{};
    std::uint32_t chord_tm = 0;
    std::uint32_t chord_tb = 0;
    std::uint32_t chord_mb = 0;
};

struct MoveDescriptor {
    MoveKind kind = MoveKind::R1Remove;
    std::variant<R1AddSite, R1RemoveSite, R2AddSite, R2RemoveSite, R3Site> site;
    // (label before, label after) for every chord surviving the move
    std::vector<std::pair<std::uint32_t, std::uint32_t>> correspondence;

    std::string describe() const;
};

// Deterministic order; increasing moves (R1Add, R2Add) only when asked.
// R2Add ranges over ordered pairs of distinct arcs.
std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d, bool include_increasing);

// Validates the site structurally against `d`; throws InapplicableMove.
GaussDiagram apply_move(const GaussDiagram& d, const MoveDescriptor& move);

// A move on `after` undoing `move`, found among inverse-kind candidates by
// canonical-form comparison against `before`.
std::optional<MoveDescriptor> inverse_move(const GaussDiagram& before, const MoveDescriptor& move,
                                           const GaussDiagram& after);

struct SearchBudget {
    std::size_t max_chords = 8;
    std::size_t max_depth = 6;
    std::size_t max_nodes = 20000;
};

struct MovePath {
    std::vector<GaussDiagram> stages; // stages.size() == moves.size() + 1
    std::vector<MoveDescriptor> moves;
};

struct SearchResult {
    bool equivalent = false; // false means Unknown, never "inequivalent"
    MovePath path;
    std::size_t nodes_expanded = 0;
};

// Bidirectional breadth-first search over canonical forms.
SearchResult equivalence_search(const GaussDiagram& d1, const GaussDiagram& d2,
                                const SearchBudget& budget);

} // namespace gaussforge
