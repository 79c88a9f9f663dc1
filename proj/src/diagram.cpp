#include "gaussforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gaussforge/errors.hpp"

namespace gaussforge {

namespace {

constexpr const char* kModule = "diagram";

} // namespace

GaussDiagram GaussDiagram::from_chords(const std::vector<Chord>& chords) {
    const std::size_t n = chords.size();
    const std::size_t m = 2 * n;
    GaussDiagram d;
    d.chords_ = chords;
    d.endpoints_.assign(m, Endpoint{});

    std::vector<long> owner(m, -1);
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const Chord& c = chords[i];
        if (c.label == 0)
            fail(ErrorKind::BadChordRoles, kModule, "chord label must be positive");
        if (std::find(labels.begin(), labels.end(), c.label) != labels.end())
            fail(ErrorKind::BadChordRoles, kModule,
                 "duplicate chord label " + std::to_string(c.label));
        labels.push_back(c.label);
        if (c.sign != 1 && c.sign != -1)
            fail(ErrorKind::BadChordRoles, kModule,
                 "chord " + std::to_string(c.label) + " has sign outside {+1,-1}");
        if (c.over_pos >= m || c.under_pos >= m)
            fail(ErrorKind::PositionOutOfRange, kModule,
                 "chord " + std::to_string(c.label) + " references a position >= " +
                     std::to_string(m));
        if (c.over_pos == c.under_pos)
            fail(ErrorKind::BadChordRoles, kModule,
                 "chord " + std::to_string(c.label) + " has coinciding endpoints");
        for (std::uint32_t p : {c.over_pos, c.under_pos}) {
            if (owner[p] != -1)
                fail(ErrorKind::DuplicatePosition, kModule,
                     "position " + std::to_string(p) + " used twice");
            owner[p] = static_cast<long>(i);
        }
        d.endpoints_[c.over_pos] = Endpoint{static_cast<std::uint32_t>(i), Role::Over};
        d.endpoints_[c.under_pos] = Endpoint{static_cast<std::uint32_t>(i), Role::Under};
    }
    return d;
}

GaussDiagram GaussDiagram::from_endpoint_tokens(const std::vector<EndpointToken>& tokens) {
    std::map<std::uint32_t, std::vector<std::size_t>> occurrences;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].label == 0)
            fail(ErrorKind::BadChordRoles, kModule, "chord label must be positive",
                 static_cast<long>(i));
        occurrences[tokens[i].label].push_back(i);
    }

    std::vector<Chord> chords;
    std::map<std::uint32_t, std::uint32_t> chord_index;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const EndpointToken& t = tokens[i];
        if (chord_index.count(t.label)) continue;
        const auto& occ = occurrences[t.label];
        if (occ.size() != 2)
            fail(ErrorKind::LabelCount, kModule,
                 "label " + std::to_string(t.label) + " occurs " +
                     std::to_string(occ.size()) + " times (want 2)",
                 static_cast<long>(occ.back()));
        const EndpointToken& a = tokens[occ[0]];
        const EndpointToken& b = tokens[occ[1]];
        if (a.role == b.role)
            fail(ErrorKind::RoleError, kModule,
                 "label " + std::to_string(t.label) + " has two " +
                     std::string(1, to_char(a.role)) + " endpoints",
                 static_cast<long>(occ[1]));
        if (a.sign != b.sign)
            fail(ErrorKind::SignMismatch, kModule,
                 "label " + std::to_string(t.label) + " carries both signs",
                 static_cast<long>(occ[1]));
        Chord c;
        c.label = t.label;
        c.sign = a.sign;
        c.over_pos = static_cast<std::uint32_t>(a.role == Role::Over ? occ[0] : occ[1]);
        c.under_pos = static_cast<std::uint32_t>(a.role == Role::Over ? occ[1] : occ[0]);
        chord_index[t.label] = static_cast<std::uint32_t>(chords.size());
        chords.push_back(c);
    }

    GaussDiagram d;
    d.chords_ = std::move(chords);
    d.endpoints_.reserve(tokens.size());
    for (const EndpointToken& t : tokens)
        d.endpoints_.push_back(Endpoint{chord_index[t.label], t.role});
    return d;
}

std::size_t GaussDiagram::index_of(std::uint32_t label) const {
    for (std::size_t i = 0; i < chords_.size(); ++i)
        if (chords_[i].label == label) return i;
    fail(ErrorKind::UnknownLabel, kModule, "no chord labelled " + std::to_string(label));
}

bool GaussDiagram::has_label(std::uint32_t label) const noexcept {
    for (const Chord& c : chords_)
        if (c.label == label) return true;
    return false;
}

std::uint32_t GaussDiagram::max_label() const noexcept {
    std::uint32_t best = 0;
    for (const Chord& c : chords_) best = std::max(best, c.label);
    return best;
}

std::vector<std::uint32_t> GaussDiagram::labels() const {
    std::vector<std::uint32_t> out;
    out.reserve(chords_.size());
    for (const Chord& c : chords_) out.push_back(c.label);
    return out;
}

std::vector<EndpointToken> GaussDiagram::endpoint_tokens() const {
    std::vector<EndpointToken> out;
    out.reserve(endpoints_.size());
    for (const Endpoint& e : endpoints_) {
        const Chord& c = chords_[e.chord_index];
        out.push_back(EndpointToken{c.label, e.role, c.sign});
    }
    return out;
}

bool GaussDiagram::operator==(const GaussDiagram& other) const {
    return canonical(*this) == canonical(other);
}

bool identical(const GaussDiagram& a, const GaussDiagram& b) {
    return a.endpoint_tokens() == b.endpoint_tokens();
}

namespace {

// x strictly inside the arc running from p to q in circle direction
bool strictly_between(std::uint32_t x, std::uint32_t p, std::uint32_t q) {
    if (p < q) return x > p && x < q;
    return x > p || x < q;
}

bool linked_by_index(const GaussDiagram& d, std::size_t ia, std::size_t ib) {
    const Chord& a = d.chord(ia);
    const Chord& b = d.chord(ib);
    const bool over_in = strictly_between(b.over_pos, a.over_pos, a.under_pos);
    const bool under_in = strictly_between(b.under_pos, a.over_pos, a.under_pos);
    return over_in != under_in;
}

} // namespace

bool linked(const GaussDiagram& d, std::uint32_t label_a, std::uint32_t label_b) {
    if (label_a == label_b)
        fail(ErrorKind::SelfLinkQuery, kModule,
             "chord " + std::to_string(label_a) + " queried against itself");
    return linked_by_index(d, d.index_of(label_a), d.index_of(label_b));
}

BitMatrix interlacement(const GaussDiagram& d) {
    const std::size_t n = d.size();
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (linked_by_index(d, i, j)) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    return m;
}

GaussDiagram delete_chords(const GaussDiagram& d, const std::vector<std::uint32_t>& labels) {
    std::vector<std::uint32_t> dead;
    for (std::uint32_t l : labels) {
        d.index_of(l); // UnknownLabel on miss
        if (std::find(dead.begin(), dead.end(), l) == dead.end()) dead.push_back(l);
    }
    std::vector<EndpointToken> survivors;
    for (const EndpointToken& t : d.endpoint_tokens())
        if (std::find(dead.begin(), dead.end(), t.label) == dead.end())
            survivors.push_back(t);
    return GaussDiagram::from_endpoint_tokens(survivors);
}

std::strong_ordering CanonicalToken::operator<=>(const CanonicalToken& o) const {
    if (auto c = static_cast<int>(role) <=> static_cast<int>(o.role); c != 0) return c;
    if (auto c = label <=> o.label; c != 0) return c;
    return (sign < 0) <=> (o.sign < 0);
}

CanonicalCode::CanonicalCode(std::vector<CanonicalToken> tokens)
    : tokens_(std::move(tokens)) {}

std::string CanonicalCode::to_string() const {
    std::string out;
    for (const CanonicalToken& t : tokens_) {
        out += to_char(t.role);
        out += std::to_string(t.label);
        out += t.sign > 0 ? '+' : '-';
    }
    return out;
}

GaussDiagram CanonicalCode::to_diagram() const {
    std::vector<EndpointToken> toks;
    toks.reserve(tokens_.size());
    for (const CanonicalToken& t : tokens_)
        toks.push_back(EndpointToken{t.label, t.role, t.sign});
    return GaussDiagram::from_endpoint_tokens(toks);
}

std::strong_ordering CanonicalCode::operator<=>(const CanonicalCode& o) const {
    return std::lexicographical_compare_three_way(tokens_.begin(), tokens_.end(),
                                                  o.tokens_.begin(), o.tokens_.end());
}

CanonicalCode canonical(const GaussDiagram& d) {
    const std::vector<EndpointToken> toks = d.endpoint_tokens();
    const std::size_t m = toks.size();
    std::vector<CanonicalToken> best;
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<CanonicalToken> cur;
        cur.reserve(m);
        std::map<std::uint32_t, std::uint32_t> relabel;
        std::uint32_t next = 1;
        for (std::size_t k = 0; k < m; ++k) {
            const EndpointToken& t = toks[(r + k) % m];
            auto [it, inserted] = relabel.try_emplace(t.label, next);
            if (inserted) ++next;
            cur.push_back(CanonicalToken{t.role, it->second, t.sign});
        }
        if (r == 0 || cur < best) best = std::move(cur);
    }
    return CanonicalCode(std::move(best));
}

bool is_smaller(const GaussDiagram& small, const GaussDiagram& large, std::size_t max_nodes) {
    if (small.size() > large.size()) return false;
    const CanonicalCode target = canonical(small);
    if (small.size() == large.size()) return canonical(large) == target;

    const std::vector<std::uint32_t> labels = large.labels();
    const std::size_t n = labels.size();
    const std::size_t diff = n - small.size();
    std::vector<std::size_t> idx(diff);
    std::iota(idx.begin(), idx.end(), 0);

    std::size_t nodes = 0;
    while (true) {
        if (++nodes > max_nodes)
            fail(ErrorKind::BudgetExceeded, kModule,
                 "subset search exceeded " + std::to_string(max_nodes) + " nodes");
        std::vector<std::uint32_t> dead;
        dead.reserve(diff);
        for (std::size_t i : idx) dead.push_back(labels[i]);
        if (canonical(delete_chords(large, dead)) == target) return true;

        bool advanced = false;
        std::size_t i = diff;
        while (i-- > 0) {
            if (idx[i] != i + n - diff) {
                ++idx[i];
                for (std::size_t j = i + 1; j < diff; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2, std::uint32_t arc) {
    const std::size_t arcs = d1.empty() ? 1 : 2 * d1.size();
    if (arc >= arcs)
        fail(ErrorKind::ArcOutOfRange, kModule,
             "arc " + std::to_string(arc) + " out of range [0," + std::to_string(arcs) + ")");

    std::vector<EndpointToken> t2 = d2.endpoint_tokens();
    const std::uint32_t shift = d1.max_label();
    for (EndpointToken& t : t2) t.label += shift;

    const std::vector<EndpointToken> t1 = d1.endpoint_tokens();
    std::vector<EndpointToken> out;
    out.reserve(t1.size() + t2.size());
    if (t1.empty()) {
        out = t2;
    } else {
        for (std::size_t i = 0; i < t1.size(); ++i) {
            out.push_back(t1[i]);
            if (i == arc) out.insert(out.end(), t2.begin(), t2.end());
        }
    }
    return GaussDiagram::from_endpoint_tokens(out);
}

} // namespace gaussforge
