#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gaussforge/gf2.hpp"

namespace gaussforge {

enum class Role : std::uint8_t { Over, Under };

inline char to_char(Role r) { return r == Role::Over ? 'O' : 'U'; }

// A chord is directed over -> under: arrowtail at over_pos, arrowhead at
// under_pos. Positions index the cyclic endpoint sequence 0..2n-1.
struct Chord {
    std::uint32_t label = 0; // positive
    std::uint32_t over_pos = 0;
    std::uint32_t under_pos = 0;
    int sign = +1;
};

struct Endpoint {
    std::uint32_t chord_index = 0;
    Role role = Role::Over;
};

struct EndpointToken {
    std::uint32_t label = 0;
    Role role = Role::Over;
    int sign = +1;

    bool operator==(const EndpointToken&) const = default;
};

// Gauss diagram of a one-component knot: an oriented core circle with n signed
// directed chords. n = 0 is the bare circle and is a first-class value.
class GaussDiagram {
public:
    GaussDiagram() = default; // empty diagram

    static GaussDiagram from_chords(const std::vector<Chord>& chords);
    // Builds from the endpoint sequence read around the circle. Validates that
    // every label occurs exactly twice with one O and one U role and one sign.
    static GaussDiagram from_endpoint_tokens(const std::vector<EndpointToken>& tokens);

    std::size_t size() const noexcept { return chords_.size(); } // n
    bool empty() const noexcept { return chords_.empty(); }

    const std::vector<Chord>& chords() const noexcept { return chords_; }
    const std::vector<Endpoint>& endpoints() const noexcept { return endpoints_; }

    const Chord& chord(std::size_t index) const { return chords_[index]; }
    std::size_t index_of(std::uint32_t label) const; // throws UnknownLabel
    bool has_label(std::uint32_t label) const noexcept;
    std::uint32_t max_label() const noexcept;
    std::vector<std::uint32_t> labels() const; // in chord storage order

    // (label, role, sign) for each position around the circle.
    std::vector<EndpointToken> endpoint_tokens() const;

    // Detour-move equality: canonical forms compared. Use identical() for raw
    // representation equality.
    bool operator==(const GaussDiagram& other) const;

private:
    std::vector<Chord> chords_;
    std::vector<Endpoint> endpoints_;
};

// Exact comparison: same endpoint sequence with the same labels and signs.
bool identical(const GaussDiagram& a, const GaussDiagram& b);

// True iff exactly one endpoint of chord a lies strictly between the endpoints
// of chord b in the cyclic order.
bool linked(const GaussDiagram& d, std::uint32_t label_a, std::uint32_t label_b);

// Symmetric boolean matrix indexed by chord storage order.
BitMatrix interlacement(const GaussDiagram& d);

// Removes the given chords; endpoint indices are compacted, order preserved,
// surviving labels unchanged.
GaussDiagram delete_chords(const GaussDiagram& d, const std::vector<std::uint32_t>& labels);

struct CanonicalToken {
    Role role = Role::Over;
    std::uint32_t label = 0;
    int sign = +1;

    bool operator==(const CanonicalToken&) const = default;
    std::strong_ordering operator<=>(const CanonicalToken& o) const;
};

// Lexicographically minimal rotation with chords relabelled by first
// occurrence. Two diagrams related by detour moves share one code.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::vector<CanonicalToken> tokens);

    const std::vector<CanonicalToken>& tokens() const noexcept { return tokens_; }
    std::string to_string() const;
    GaussDiagram to_diagram() const;

    bool operator==(const CanonicalCode&) const = default;
    std::strong_ordering operator<=>(const CanonicalCode& o) const;

private:
    std::vector<CanonicalToken> tokens_;
};

CanonicalCode canonical(const GaussDiagram& d);

// True iff some chord subset of `large` deletes to a diagram canonical-equal
// to `small` (the empty subset counts, so the order is reflexive). Exhaustive
// over subsets of the size difference; throws BudgetExceeded past max_nodes.
bool is_smaller(const GaussDiagram& small, const GaussDiagram& large,
                std::size_t max_nodes = std::size_t(1) << 20);

// Splices the full endpoint block of d2 (labels shifted past d1's) into the
// arc following endpoint `arc` of d1. arc ranges over [0, max(2n, 1)).
GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2, std::uint32_t arc);

} // namespace gaussforge
