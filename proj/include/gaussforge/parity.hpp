#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaussforge/diagram.hpp"
#include "gaussforge/gf2.hpp"
#include "gaussforge/moves.hpp"

namespace gaussforge {

// label -> 0 (even) or 1 (odd)
using ParityAssignment = std::map<std::uint32_t, int>;

// Parity of each chord: the number of chords linked with it, mod 2.
ParityAssignment gaussian_parity(const GaussDiagram& d);

// Abelian 2-group presented by one generator per chord and one relation per
// boundary cycle of the band surface (incidence counts mod 2). A chord class
// is trivial exactly when its generator lies in the row space.
class ParityGroup {
public:
    ParityGroup(std::vector<std::uint32_t> labels, BitMatrix relations);

    std::size_t generator_count() const noexcept { return labels_.size(); }
    const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
    const BitMatrix& relations() const noexcept { return relations_; }
    std::size_t rank() const noexcept { return echelon_.rank(); }
    std::size_t dim() const noexcept { return labels_.size() - echelon_.rank(); }

    bool class_trivial(std::uint32_t label) const;
    bool classes_equal(std::uint32_t a, std::uint32_t b) const;
    bool class_sum_trivial(const std::vector<std::uint32_t>& labels) const;

private:
    std::size_t index_of(std::uint32_t label) const;

    std::vector<std::uint32_t> labels_;
    BitMatrix relations_;
    Gf2Echelon echelon_;
};

ParityGroup parity_group(const GaussDiagram& d);

enum class ParityKind { Gaussian, GaussianWeak, Group };

struct AxiomReport {
    bool applicable = true;
    bool correspondence_ok = true;
    bool move_ok = true;
    std::string detail;

    bool passed() const { return !applicable || (correspondence_ok && move_ok); }
};

// Checks the parity axioms on one move. `after` must be the verbatim result of
// applying `move` to `before`. Group parity is only checked when the move
// preserves the surface genus; otherwise the report is marked not applicable.
AxiomReport check_parity_axioms(const GaussDiagram& before, const MoveDescriptor& move,
                                const GaussDiagram& after, ParityKind kind);

} // namespace gaussforge
