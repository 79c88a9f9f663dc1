#include "gaussforge/parity.hpp"

#include <algorithm>
#include <sstream>

#include "gaussforge/errors.hpp"
#include "gaussforge/surface.hpp"

namespace gaussforge {

namespace {
constexpr const char* kModule = "parity";
}

ParityAssignment gaussian_parity(const GaussDiagram& d) {
    ParityAssignment out;
    const std::vector<std::uint32_t> labels = d.labels();
    for (std::uint32_t a : labels) {
        int count = 0;
        for (std::uint32_t b : labels)
            if (a != b && linked(d, a, b)) ++count;
        out[a] = count % 2;
    }
    return out;
}

ParityGroup::ParityGroup(std::vector<std::uint32_t> labels, BitMatrix relations)
    : labels_(std::move(labels)), relations_(std::move(relations)), echelon_(relations_) {
    if (relations_.cols() != labels_.size())
        fail(ErrorKind::Internal, kModule, "relation width does not match generator count");
}

std::size_t ParityGroup::index_of(std::uint32_t label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        fail(ErrorKind::UnknownLabel, kModule, "no generator with label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

bool ParityGroup::class_trivial(std::uint32_t label) const {
    return echelon_.contains(unit_bit_row(labels_.size(), index_of(label)));
}

bool ParityGroup::classes_equal(std::uint32_t a, std::uint32_t b) const {
    BitRow row = unit_bit_row(labels_.size(), index_of(a));
    xor_into(row, unit_bit_row(labels_.size(), index_of(b)));
    return echelon_.contains(std::move(row));
}

bool ParityGroup::class_sum_trivial(const std::vector<std::uint32_t>& labels) const {
    const std::size_t words = labels_.empty() ? 1 : (labels_.size() + 63) / 64;
    BitRow row(words, 0);
    for (std::uint32_t l : labels)
        xor_into(row, unit_bit_row(std::max<std::size_t>(labels_.size(), 1), index_of(l)));
    return echelon_.contains(std::move(row));
}

ParityGroup parity_group(const GaussDiagram& d) {
    const std::vector<std::uint32_t> labels = d.labels();
    const std::vector<PastedCycle> cycles = boundary_cycles(d);
    BitMatrix relations(cycles.size(), labels.size());
    for (std::size_t r = 0; r < cycles.size(); ++r)
        for (const auto& [label, count] : cycles[r].incidence)
            if (count % 2 != 0) {
                const auto it = std::find(labels.begin(), labels.end(), label);
                relations.set(r, static_cast<std::size_t>(it - labels.begin()), true);
            }
    return ParityGroup(labels, std::move(relations));
}

namespace {

std::vector<std::uint32_t> missing_labels(
    const std::vector<std::uint32_t>& all,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, bool first_slot) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t l : all) {
        bool found = false;
        for (const auto& [b, a] : pairs)
            if ((first_slot ? b : a) == l) found = true;
        if (!found) out.push_back(l);
    }
    return out;
}

std::array<std::uint32_t, 3> r3_labels(const MoveDescriptor& move) {
    const auto& site = std::get<R3Site>(move.site);
    return {site.chord_tm, site.chord_tb, site.chord_mb};
}

AxiomReport check_gaussian(const GaussDiagram& before, const MoveDescriptor& move,
                           const GaussDiagram& after,
                           const std::vector<std::uint32_t>& created,
                           const std::vector<std::uint32_t>& destroyed, bool weak) {
    AxiomReport report;
    const ParityAssignment pb = gaussian_parity(before);
    const ParityAssignment pa = gaussian_parity(after);

    for (const auto& [b, a] : move.correspondence) {
        if (pb.at(b) != pa.at(a)) {
            report.move_ok = false;
            std::ostringstream msg;
            msg << "surviving chord " << b << " -> " << a << " changed parity " << pb.at(b)
                << " -> " << pa.at(a);
            report.detail = msg.str();
            return report;
        }
    }

    switch (move.kind) {
    case MoveKind::R1Add:
        if (pa.at(created[0]) != 0) {
            report.move_ok = false;
            report.detail = "twist chord " + std::to_string(created[0]) + " is odd";
        }
        break;
    case MoveKind::R1Remove:
        if (pb.at(destroyed[0]) != 0) {
            report.move_ok = false;
            report.detail = "twist chord " + std::to_string(destroyed[0]) + " is odd";
        }
        break;
    case MoveKind::R2Add:
        if (pa.at(created[0]) != pa.at(created[1])) {
            report.move_ok = false;
            report.detail = "poke chords have unequal parity";
        }
        break;
    case MoveKind::R2Remove:
        if (pb.at(destroyed[0]) != pb.at(destroyed[1])) {
            report.move_ok = false;
            report.detail = "poke chords have unequal parity";
        }
        break;
    case MoveKind::R3: {
        const std::array<std::uint32_t, 3> labels = r3_labels(move);
        const int odd = pb.at(labels[0]) + pb.at(labels[1]) + pb.at(labels[2]);
        const bool bad = weak ? odd == 1 : odd % 2 != 0;
        if (bad) {
            report.move_ok = false;
            report.detail = "slide triple has " + std::to_string(odd) + " odd chords";
        }
        break;
    }
    }
    if (report.move_ok && report.detail.empty()) report.detail = "ok";
    return report;
}

AxiomReport check_group(const GaussDiagram& before, const MoveDescriptor& move,
                        const GaussDiagram& after,
                        const std::vector<std::uint32_t>& created,
                        const std::vector<std::uint32_t>& destroyed) {
    AxiomReport report;
    if (genus(before) != genus(after)) {
        report.applicable = false;
        report.detail = "move changes the surface genus";
        return report;
    }
    const ParityGroup gb = parity_group(before);
    const ParityGroup ga = parity_group(after);

    for (const auto& [b, a] : move.correspondence) {
        if (gb.class_trivial(b) != ga.class_trivial(a)) {
            report.move_ok = false;
            std::ostringstream msg;
            msg << "surviving chord " << b << " -> " << a << " changed class triviality";
            report.detail = msg.str();
            return report;
        }
    }

    switch (move.kind) {
    case MoveKind::R1Add:
        if (!ga.class_trivial(created[0])) {
            report.move_ok = false;
            report.detail = "twist chord class is nontrivial";
        }
        break;
    case MoveKind::R1Remove:
        if (!gb.class_trivial(destroyed[0])) {
            report.move_ok = false;
            report.detail = "twist chord class is nontrivial";
        }
        break;
    case MoveKind::R2Add:
        if (!ga.classes_equal(created[0], created[1])) {
            report.move_ok = false;
            report.detail = "poke chord classes differ";
        }
        break;
    case MoveKind::R2Remove:
        if (!gb.classes_equal(destroyed[0], destroyed[1])) {
            report.move_ok = false;
            report.detail = "poke chord classes differ";
        }
        break;
    case MoveKind::R3: {
        const std::array<std::uint32_t, 3> labels = r3_labels(move);
        const std::vector<std::uint32_t> triple(labels.begin(), labels.end());
        if (!gb.class_sum_trivial(triple) || !ga.class_sum_trivial(triple)) {
            report.move_ok = false;
            report.detail = "slide triple does not sum to the trivial class";
        }
        break;
    }
    }
    if (report.move_ok && report.detail.empty()) report.detail = "ok";
    return report;
}

} // namespace

AxiomReport check_parity_axioms(const GaussDiagram& before, const MoveDescriptor& move,
                                const GaussDiagram& after, ParityKind kind) {
    if (!identical(apply_move(before, move), after))
        fail(ErrorKind::CorrespondenceMismatch, kModule,
             "after diagram is not the result of the move");

    const std::vector<std::uint32_t> created =
        missing_labels(after.labels(), move.correspondence, false);
    const std::vector<std::uint32_t> destroyed =
        missing_labels(before.labels(), move.correspondence, true);

    AxiomReport report;
    std::size_t want_created = 0, want_destroyed = 0;
    switch (move.kind) {
    case MoveKind::R1Add: want_created = 1; break;
    case MoveKind::R1Remove: want_destroyed = 1; break;
    case MoveKind::R2Add: want_created = 2; break;
    case MoveKind::R2Remove: want_destroyed = 2; break;
    case MoveKind::R3: break;
    }
    for (const auto& [b, a] : move.correspondence) {
        if (!before.has_label(b) || !after.has_label(a)) {
            report.correspondence_ok = false;
            report.detail = "correspondence names a missing label";
            return report;
        }
    }
    if (created.size() != want_created || destroyed.size() != want_destroyed) {
        report.correspondence_ok = false;
        report.detail = "correspondence does not cover the surviving chords";
        return report;
    }

    switch (kind) {
    case ParityKind::Gaussian:
        return check_gaussian(before, move, after, created, destroyed, false);
    case ParityKind::GaussianWeak:
        return check_gaussian(before, move, after, created, destroyed, true);
    case ParityKind::Group:
        return check_group(before, move, after, created, destroyed);
    }
    fail(ErrorKind::Internal, kModule, "unknown parity kind");
}

} // namespace gaussforge
