#pragma once

#include "gaussforge/diagram.hpp"
#include "gaussforge/laurent.hpp"

namespace gaussforge {

int writhe(const GaussDiagram& d);

// Sum of signs over chords of odd Gaussian parity.
int odd_writhe(const GaussDiagram& d);

// State sum over all 2^n smoothings. A +1 chord smooths A-wise by joining
// {over-in, under-out} and {over-out, under-in}; the pairings swap for the
// B-smoothing and for -1 chords. Throws SizeLimitExceeded past max_chords.
LaurentPolynomial kauffman_bracket(const GaussDiagram& d, std::size_t max_chords = 20);

// (-A^3)^(-writhe) * bracket
LaurentPolynomial f_polynomial(const GaussDiagram& d, std::size_t max_chords = 20);

// Maximal cyclic runs of arrowheads in the endpoint sequence.
std::size_t bridge_count(const GaussDiagram& d);

} // namespace gaussforge
