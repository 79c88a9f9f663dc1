#include "gaussforge/invariants.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "gaussforge/errors.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/surface.hpp"

namespace gaussforge {

namespace {

constexpr const char* kModule = "invariants";

} // namespace

int writhe(const GaussDiagram& d) {
    int w = 0;
    for (const Chord& c : d.chords()) w += c.sign;
    return w;
}

int odd_writhe(const GaussDiagram& d) {
    const ParityAssignment parity = gaussian_parity(d);
    int w = 0;
    for (const Chord& c : d.chords())
        if (parity.at(c.label) == 1) w += c.sign;
    return w;
}

LaurentPolynomial kauffman_bracket(const GaussDiagram& d, std::size_t max_chords) {
    const std::size_t n = d.size();
    if (n > max_chords)
        fail(ErrorKind::SizeLimitExceeded, kModule,
             std::to_string(n) + " chords exceed the state-sum limit of " +
                 std::to_string(max_chords));
    if (n == 0) return LaurentPolynomial::unit();

    std::vector<CrossingEnds> ends;
    ends.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ends.push_back(crossing_ends(d, i));

    // delta^k for k up to the largest possible loop surplus
    const LaurentPolynomial delta =
        LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::unit()};
    for (std::size_t k = 1; k <= n; ++k) delta_pow.push_back(delta_pow.back() * delta);

    const std::size_t darts = 4 * n;
    std::vector<std::uint32_t> partner(darts);
    std::vector<bool> seen(darts);

    LaurentPolynomial bracket;
    for (std::uint64_t state = 0; state < (std::uint64_t(1) << n); ++state) {
        for (std::size_t i = 0; i < n; ++i) {
            const CrossingEnds& e = ends[i];
            const bool b_smoothing = (state >> i) & 1;
            // oriented pairing for +A, anti-oriented for +B; swapped on - chords
            const bool oriented = (d.chord(i).sign > 0) != b_smoothing;
            if (oriented) {
                partner[e.over_in] = e.under_out;
                partner[e.under_out] = e.over_in;
                partner[e.over_out] = e.under_in;
                partner[e.under_in] = e.over_out;
            } else {
                partner[e.over_in] = e.under_in;
                partner[e.under_in] = e.over_in;
                partner[e.over_out] = e.under_out;
                partner[e.under_out] = e.over_out;
            }
        }

        std::size_t loops = 0;
        seen.assign(darts, false);
        for (std::uint32_t start = 0; start < darts; ++start) {
            if (seen[start]) continue;
            ++loops;
            std::uint32_t cur = start;
            do {
                seen[cur] = true;
                const std::uint32_t other = cur ^ 1; // far end of the same arc
                seen[other] = true;
                cur = partner[other];
            } while (cur != start);
        }

        const int b = std::popcount(state);
        const int a = static_cast<int>(n) - b;
        bracket += LaurentPolynomial::monomial(1, a - b) * delta_pow[loops - 1];
    }
    return bracket;
}

LaurentPolynomial f_polynomial(const GaussDiagram& d, std::size_t max_chords) {
    const int w = writhe(d);
    const long long coeff = (w % 2 == 0) ? 1 : -1; // (-1)^(-w)
    return kauffman_bracket(d, max_chords) * LaurentPolynomial::monomial(coeff, -3 * w);
}

std::size_t bridge_count(const GaussDiagram& d) {
    const auto& eps = d.endpoints();
    const std::size_t m = eps.size();
    std::size_t bridges = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (eps[i].role == Role::Under && eps[(i + m - 1) % m].role == Role::Over)
            ++bridges;
    return bridges;
}

} // namespace gaussforge
