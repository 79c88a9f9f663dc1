#include "gaussforge/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "gaussforge/errors.hpp"

namespace gaussforge {

const char* to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    }
    fail(ErrorKind::Internal, "moves", "unknown move kind");
}

MoveKind inverse_kind(MoveKind kind) {
    switch (kind) {
    case MoveKind::R1Add: return MoveKind::R1Remove;
    case MoveKind::R1Remove: return MoveKind::R1Add;
    case MoveKind::R2Add: return MoveKind::R2Remove;
    case MoveKind::R2Remove: return MoveKind::R2Add;
    case MoveKind::R3: return MoveKind::R3;
    }
    fail(ErrorKind::Internal, "moves", "unknown move kind");
}

std::string MoveDescriptor::describe() const {
    std::ostringstream out;
    out << to_string(kind);
    if (const auto* s = std::get_if<R1AddSite>(&site)) {
        out << " arc=" << s->arc << " sign=" << (s->sign > 0 ? '+' : '-')
            << " order=" << (s->over_first ? "OU" : "UO");
    } else if (const auto* s = std::get_if<R1RemoveSite>(&site)) {
        out << " chord=" << s->label;
    } else if (const auto* s = std::get_if<R2AddSite>(&site)) {
        out << " arcs=(" << s->over_arc << "," << s->under_arc << ")"
            << (s->parallel ? " parallel" : " antiparallel")
            << " lead=" << (s->lead_sign > 0 ? '+' : '-');
    } else if (const auto* s = std::get_if<R2RemoveSite>(&site)) {
        out << " chords=(" << s->label_a << "," << s->label_b << ")";
    } else if (const auto* s = std::get_if<R3Site>(&site)) {
        out << " pairs=(" << s->pair_start[0] << "," << s->pair_start[1] << ","
            << s->pair_start[2] << ") tm=" << s->chord_tm << " tb=" << s->chord_tb
            << " mb=" << s->chord_mb;
    }
    return out.str();
}

namespace {

constexpr const char* kModule = "moves";

bool adjacent_cyclic(std::uint32_t p, std::uint32_t q, std::size_t m) {
    return q == (p + 1) % m || p == (q + 1) % m;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> identity_correspondence(
    const GaussDiagram& d, const std::vector<std::uint32_t>& removed = {}) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t l : d.labels())
        if (std::find(removed.begin(), removed.end(), l) == removed.end())
            out.emplace_back(l, l);
    return out;
}

GaussDiagram with_blocks(
    const GaussDiagram& d,
    const std::vector<std::pair<std::uint32_t, std::vector<EndpointToken>>>& blocks) {
    const std::vector<EndpointToken> toks = d.endpoint_tokens();
    std::vector<EndpointToken> out;
    if (toks.empty()) {
        for (const auto& [arc, block] : blocks)
            out.insert(out.end(), block.begin(), block.end());
    } else {
        for (std::size_t i = 0; i < toks.size(); ++i) {
            out.push_back(toks[i]);
            for (const auto& [arc, block] : blocks)
                if (arc == i) out.insert(out.end(), block.begin(), block.end());
        }
    }
    return GaussDiagram::from_endpoint_tokens(out);
}

bool r1_removable(const GaussDiagram& d, std::size_t chord_index) {
    const Chord& c = d.chord(chord_index);
    return adjacent_cyclic(c.over_pos, c.under_pos, d.endpoints().size());
}

bool r2_removable(const GaussDiagram& d, std::size_t ia, std::size_t ib) {
    const std::size_t m = d.endpoints().size();
    const Chord& a = d.chord(ia);
    const Chord& b = d.chord(ib);
    return a.sign == -b.sign && adjacent_cyclic(a.over_pos, b.over_pos, m) &&
           adjacent_cyclic(a.under_pos, b.under_pos, m);
}

// An R2 removal can be undone by an R2 insertion only if at least one endpoint
// survives between the two removed blocks on both sides; otherwise the
// insertion would need both blocks in the same gap, which R2AddSite forbids.
bool r2_remove_invertible(const GaussDiagram& d, std::size_t ia, std::size_t ib) {
    const std::size_t m = d.endpoints().size();
    const Chord& a = d.chord(ia);
    const Chord& b = d.chord(ib);
    const std::uint32_t pt =
        b.over_pos == (a.over_pos + 1) % m ? a.over_pos : b.over_pos;
    const std::uint32_t ph =
        b.under_pos == (a.under_pos + 1) % m ? a.under_pos : b.under_pos;
    return ph != (pt + 2) % m && pt != (ph + 2) % m;
}

// Strand-role classification of a candidate triangle. The top strand crosses
// over both other strands, the bottom strand under both, the middle strand
// one each way. Each strand traverses its two triangle crossings at
// consecutive core positions (a pair), and the slide move swaps the two
// endpoints inside each pair. The sign condition below separates the two
// triangle chiralities; a slide exists exactly when e1 == e2 == e3.
std::optional<R3Site> classify_triangle(const GaussDiagram& d,
                                        const std::array<std::uint32_t, 3>& starts) {
    const std::size_t m = d.endpoints().size();
    const auto& eps = d.endpoints();

    for (std::size_t i = 0; i < 3; ++i) {
        if (starts[i] >= m) return std::nullopt;
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (starts[i] == starts[j]) return std::nullopt;
            if (adjacent_cyclic(starts[i], starts[j], m)) return std::nullopt;
        }
    }

    struct PairInfo {
        std::uint32_t start = 0;
        std::array<std::uint32_t, 2> chord{}; // chord indices at (start, start+1)
        std::array<Role, 2> role{};
    };
    std::array<PairInfo, 3> pairs;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::uint32_t s = starts[i];
        const Endpoint& e0 = eps[s];
        const Endpoint& e1 = eps[(s + 1) % m];
        if (e0.chord_index == e1.chord_index) return std::nullopt;
        pairs[i] = PairInfo{s, {e0.chord_index, e1.chord_index}, {e0.role, e1.role}};
    }

    // every chord of the triangle must sit in exactly two of the pairs
    std::map<std::uint32_t, std::vector<std::size_t>> occ;
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t slot = 0; slot < 2; ++slot)
            occ[pairs[p].chord[slot]].push_back(p);
    if (occ.size() != 3) return std::nullopt;
    for (const auto& [chord, at] : occ) {
        (void)chord;
        if (at.size() != 2 || at[0] == at[1]) return std::nullopt;
    }

    long t_pair = -1, m_pair = -1, b_pair = -1;
    for (std::size_t p = 0; p < 3; ++p) {
        const bool over0 = pairs[p].role[0] == Role::Over;
        const bool over1 = pairs[p].role[1] == Role::Over;
        long* slot = nullptr;
        if (over0 && over1) slot = &t_pair;
        else if (!over0 && !over1) slot = &b_pair;
        else slot = &m_pair;
        if (*slot != -1) return std::nullopt;
        *slot = static_cast<long>(p);
    }
    if (t_pair < 0 || m_pair < 0 || b_pair < 0) return std::nullopt;

    auto other_pair = [&occ](std::uint32_t chord, std::size_t here) {
        const auto& at = occ.at(chord);
        return at[0] == here ? at[1] : at[0];
    };

    const PairInfo& tp = pairs[static_cast<std::size_t>(t_pair)];
    const PairInfo& mp = pairs[static_cast<std::size_t>(m_pair)];
    const PairInfo& bp = pairs[static_cast<std::size_t>(b_pair)];

    // name each chord after the strand pair it joins
    std::uint32_t tm_chord = 0, tb_chord = 0;
    bool have_tm = false, have_tb = false;
    for (std::uint32_t c : tp.chord) {
        const std::size_t other = other_pair(c, static_cast<std::size_t>(t_pair));
        if (other == static_cast<std::size_t>(m_pair)) {
            tm_chord = c;
            have_tm = true;
        } else if (other == static_cast<std::size_t>(b_pair)) {
            tb_chord = c;
            have_tb = true;
        }
    }
    if (!have_tm || !have_tb) return std::nullopt;

    const std::uint32_t mb_chord = mp.role[0] == Role::Over ? mp.chord[0] : mp.chord[1];
    if (mb_chord == tm_chord || mb_chord == tb_chord) return std::nullopt;
    if (other_pair(mb_chord, static_cast<std::size_t>(m_pair)) !=
        static_cast<std::size_t>(b_pair))
        return std::nullopt;

    const bool tT = tp.chord[0] == tm_chord; // top strand meets the middle one first
    const bool tM = mp.chord[0] == mb_chord; // middle strand meets the bottom one first
    const bool tB = bp.chord[0] == mb_chord; // bottom strand meets the middle one first

    const bool e1 = (d.chord(tb_chord).sign > 0) != (tT == tB);
    const bool e2 = (d.chord(tm_chord).sign > 0) != (tT == tM);
    const bool e3 = (d.chord(mb_chord).sign < 0) != (tM == tB);
    if (e1 != e2 || e2 != e3) return std::nullopt;

    R3Site site;
    site.pair_start = {tp.start, mp.start, bp.start};
    site.chord_tm = d.chord(tm_chord).label;
    site.chord_tb = d.chord(tb_chord).label;
    site.chord_mb = d.chord(mb_chord).label;
    return site;
}

GaussDiagram apply_r1_add(const GaussDiagram& d, const R1AddSite& s) {
    const std::size_t arcs = d.empty() ? 1 : d.endpoints().size();
    if (s.arc >= arcs)
        fail(ErrorKind::InapplicableMove, kModule, "twist arc out of range");
    if (s.sign != 1 && s.sign != -1)
        fail(ErrorKind::InapplicableMove, kModule, "twist sign must be +1 or -1");
    const std::uint32_t label = d.max_label() + 1;
    std::vector<EndpointToken> block;
    if (s.over_first)
        block = {{label, Role::Over, s.sign}, {label, Role::Under, s.sign}};
    else
        block = {{label, Role::Under, s.sign}, {label, Role::Over, s.sign}};
    return with_blocks(d, {{s.arc, block}});
}

GaussDiagram apply_r1_remove(const GaussDiagram& d, const R1RemoveSite& s) {
    if (!d.has_label(s.label))
        fail(ErrorKind::InapplicableMove, kModule, "no chord with the given label");
    if (!r1_removable(d, d.index_of(s.label)))
        fail(ErrorKind::InapplicableMove, kModule, "chord endpoints are not adjacent");
    return delete_chords(d, {s.label});
}

GaussDiagram apply_r2_add(const GaussDiagram& d, const R2AddSite& s) {
    const std::size_t arcs = d.empty() ? 1 : d.endpoints().size();
    if (s.over_arc >= arcs || s.under_arc >= arcs)
        fail(ErrorKind::InapplicableMove, kModule, "poke arc out of range");
    if (s.over_arc == s.under_arc)
        fail(ErrorKind::InapplicableMove, kModule, "poke arcs must be distinct");
    if (s.lead_sign != 1 && s.lead_sign != -1)
        fail(ErrorKind::InapplicableMove, kModule, "poke sign must be +1 or -1");
    const std::uint32_t la = d.max_label() + 1;
    const std::uint32_t lb = la + 1;
    const int sa = s.lead_sign;
    const int sb = -s.lead_sign;
    std::vector<EndpointToken> tails = {{la, Role::Over, sa}, {lb, Role::Over, sb}};
    std::vector<EndpointToken> heads;
    if (s.parallel)
        heads = {{la, Role::Under, sa}, {lb, Role::Under, sb}};
    else
        heads = {{lb, Role::Under, sb}, {la, Role::Under, sa}};
    return with_blocks(d, {{s.over_arc, tails}, {s.under_arc, heads}});
}

GaussDiagram apply_r2_remove(const GaussDiagram& d, const R2RemoveSite& s) {
    if (!d.has_label(s.label_a) || !d.has_label(s.label_b))
        fail(ErrorKind::InapplicableMove, kModule, "no chord with the given label");
    if (s.label_a == s.label_b)
        fail(ErrorKind::InapplicableMove, kModule, "poke chords must be distinct");
    if (!r2_removable(d, d.index_of(s.label_a), d.index_of(s.label_b)))
        fail(ErrorKind::InapplicableMove, kModule, "chords do not form a cancelling pair");
    return delete_chords(d, {s.label_a, s.label_b});
}

GaussDiagram apply_r3(const GaussDiagram& d, const R3Site& s) {
    const std::optional<R3Site> found = classify_triangle(d, s.pair_start);
    if (!found || found->pair_start != s.pair_start || found->chord_tm != s.chord_tm ||
        found->chord_tb != s.chord_tb || found->chord_mb != s.chord_mb)
        fail(ErrorKind::InapplicableMove, kModule, "no slide triangle at the given site");
    const std::size_t m = d.endpoints().size();
    std::vector<EndpointToken> toks = d.endpoint_tokens();
    for (std::uint32_t start : s.pair_start)
        std::swap(toks[start], toks[(start + 1) % m]);
    return GaussDiagram::from_endpoint_tokens(toks);
}

} // namespace

std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d, bool include_increasing) {
    std::vector<MoveDescriptor> out;
    const std::size_t n = d.size();
    const std::size_t m = d.endpoints().size();

    for (std::size_t i = 0; i < n; ++i) {
        if (!r1_removable(d, i)) continue;
        MoveDescriptor mv;
        mv.kind = MoveKind::R1Remove;
        mv.site = R1RemoveSite{d.chord(i).label};
        mv.correspondence = identity_correspondence(d, {d.chord(i).label});
        out.push_back(std::move(mv));
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!r2_removable(d, i, j)) continue;
            MoveDescriptor mv;
            mv.kind = MoveKind::R2Remove;
            mv.site = R2RemoveSite{d.chord(i).label, d.chord(j).label};
            mv.correspondence =
                identity_correspondence(d, {d.chord(i).label, d.chord(j).label});
            out.push_back(std::move(mv));
        }
    }

    if (n >= 3) {
        for (std::uint32_t s1 = 0; s1 < m; ++s1)
            for (std::uint32_t s2 = s1 + 1; s2 < m; ++s2)
                for (std::uint32_t s3 = s2 + 1; s3 < m; ++s3) {
                    const std::optional<R3Site> site = classify_triangle(d, {s1, s2, s3});
                    if (!site) continue;
                    MoveDescriptor mv;
                    mv.kind = MoveKind::R3;
                    mv.site = *site;
                    mv.correspondence = identity_correspondence(d);
                    out.push_back(std::move(mv));
                }
    }

    if (include_increasing) {
        const std::size_t arcs = d.empty() ? 1 : m;
        for (std::uint32_t arc = 0; arc < arcs; ++arc)
            for (int sign : {1, -1})
                for (bool over_first : {true, false}) {
                    MoveDescriptor mv;
                    mv.kind = MoveKind::R1Add;
                    mv.site = R1AddSite{arc, sign, over_first};
                    mv.correspondence = identity_correspondence(d);
                    out.push_back(std::move(mv));
                }
        if (!d.empty()) {
            for (std::uint32_t oa = 0; oa < arcs; ++oa)
                for (std::uint32_t ua = 0; ua < arcs; ++ua) {
                    if (oa == ua) continue;
                    for (bool parallel : {true, false})
                        for (int lead : {1, -1}) {
                            MoveDescriptor mv;
                            mv.kind = MoveKind::R2Add;
                            mv.site = R2AddSite{oa, ua, parallel, lead};
                            mv.correspondence = identity_correspondence(d);
                            out.push_back(std::move(mv));
                        }
                }
        }
    }

    return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveDescriptor& move) {
    switch (move.kind) {
    case MoveKind::R1Add:
        return apply_r1_add(d, std::get<R1AddSite>(move.site));
    case MoveKind::R1Remove:
        return apply_r1_remove(d, std::get<R1RemoveSite>(move.site));
    case MoveKind::R2Add:
        return apply_r2_add(d, std::get<R2AddSite>(move.site));
    case MoveKind::R2Remove:
        return apply_r2_remove(d, std::get<R2RemoveSite>(move.site));
    case MoveKind::R3:
        return apply_r3(d, std::get<R3Site>(move.site));
    }
    fail(ErrorKind::Internal, kModule, "unknown move kind");
}

std::optional<MoveDescriptor> inverse_move(const GaussDiagram& before,
                                           const MoveDescriptor& move,
                                           const GaussDiagram& after) {
    (void)move;
    const CanonicalCode target = canonical(before);
    const MoveKind want = inverse_kind(move.kind);
    for (const MoveDescriptor& cand : enumerate_moves(after, true)) {
        if (cand.kind != want) continue;
        if (canonical(apply_move(after, cand)) == target) return cand;
    }
    return std::nullopt;
}

SearchResult equivalence_search(const GaussDiagram& d1, const GaussDiagram& d2,
                                const SearchBudget& budget) {
    SearchResult res;
    const std::string k1 = canonical(d1).to_string();
    const std::string k2 = canonical(d2).to_string();
    if (k1 == k2) {
        res.equivalent = true;
        res.path.stages = {d1};
        return res;
    }

    struct Node {
        GaussDiagram diagram;
        std::string parent; // empty at the roots
        MoveDescriptor move;
        std::size_t depth = 0;
    };
    std::array<std::map<std::string, Node>, 2> visited;
    std::array<std::deque<std::string>, 2> frontier;
    visited[0].emplace(k1, Node{d1, "", {}, 0});
    visited[1].emplace(k2, Node{d2, "", {}, 0});
    frontier[0].push_back(k1);
    frontier[1].push_back(k2);

    std::optional<std::string> meet;
    while (!meet && (!frontier[0].empty() || !frontier[1].empty())) {
        std::size_t side;
        if (frontier[0].empty()) side = 1;
        else if (frontier[1].empty()) side = 0;
        else side = frontier[0].size() <= frontier[1].size() ? 0 : 1;

        const std::string key = frontier[side].front();
        frontier[side].pop_front();
        const Node cur = visited[side].at(key);
        if (cur.depth >= budget.max_depth) continue;

        for (const MoveDescriptor& mv : enumerate_moves(cur.diagram, true)) {
            // edges of the d2-rooted tree get reversed later, so skip the
            // removals that no insertion can undo
            if (side == 1 && mv.kind == MoveKind::R2Remove) {
                const auto& s = std::get<R2RemoveSite>(mv.site);
                if (!r2_remove_invertible(cur.diagram, cur.diagram.index_of(s.label_a),
                                          cur.diagram.index_of(s.label_b)))
                    continue;
            }
            GaussDiagram child = apply_move(cur.diagram, mv);
            if (child.size() > budget.max_chords) continue;
            const std::string ck = canonical(child).to_string();
            if (visited[side].count(ck)) continue;
            if (++res.nodes_expanded > budget.max_nodes) return res;
            visited[side].emplace(ck, Node{std::move(child), key, mv, cur.depth + 1});
            frontier[side].push_back(ck);
            if (visited[1 - side].count(ck)) {
                meet = ck;
                break;
            }
        }
    }
    if (!meet) return res;

    auto chain_to_root = [](const std::map<std::string, Node>& tree, const std::string& leaf) {
        std::vector<std::string> chain;
        std::string k = leaf;
        while (true) {
            chain.push_back(k);
            const std::string& p = tree.at(k).parent;
            if (p.empty()) break;
            k = p;
        }
        return chain; // leaf first, root last
    };

    std::vector<std::string> left = chain_to_root(visited[0], *meet);
    std::reverse(left.begin(), left.end()); // root (d1) first, meet last
    res.path.stages.push_back(d1);
    for (std::size_t i = 1; i < left.size(); ++i) {
        const Node& node = visited[0].at(left[i]);
        res.path.moves.push_back(node.move);
        res.path.stages.push_back(node.diagram);
    }

    // The right half of the path was discovered from d2 backwards. Rebuild it
    // forwards by finding, at each step, an inverse move from the current
    // concrete diagram whose result matches the recorded canonical form.
    const std::vector<std::string> right = chain_to_root(visited[1], *meet);
    GaussDiagram current = res.path.stages.back();
    for (std::size_t i = 0; i + 1 < right.size(); ++i) {
        const Node& edge = visited[1].at(right[i]); // parent right[i+1] -> right[i]
        const MoveKind want = inverse_kind(edge.move.kind);
        bool found = false;
        for (const MoveDescriptor& cand : enumerate_moves(current, true)) {
            if (cand.kind != want) continue;
            GaussDiagram next = apply_move(current, cand);
            if (canonical(next).to_string() != right[i + 1]) continue;
            res.path.moves.push_back(cand);
            current = std::move(next);
            res.path.stages.push_back(current);
            found = true;
            break;
        }
        if (!found)
            fail(ErrorKind::Internal, kModule, "failed to rebuild the meeting path");
    }

    res.equivalent = true;
    return res;
}

} // namespace gaussforge
