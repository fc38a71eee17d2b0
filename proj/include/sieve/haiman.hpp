#pragma once

#include "sieve/tableau.hpp"
#include "sieve/word.hpp"

namespace sieve {

// Row index of the largest entry, counting rows from the bottom (bottom row = 1).
int bottom_up_row_of_max(const ShiftedStandardTableau& s);

/// Promotion sequence: letter i is the bottom-up row holding n^2 in p^i(S),
/// for i = 1..n^2. S must have doubled staircase shape (2n-1, ..., 1).
Word phi(const ShiftedStandardTableau& s);

/// Inverse of phi by table lookup over the staircase enumeration. Throws
/// InvalidInput when w is not a reduced word for w0.
ShiftedStandardTableau phi_inverse(const Word& w);

// Square -> doubled staircase: rectify the square placed in the shifted plane.
ShiftedStandardTableau haiman_h(const StandardTableau& q);

// Inverse of haiman_h by table lookup over the square enumeration.
StandardTableau haiman_h_inverse(const ShiftedStandardTableau& s);

// phi(haiman_h(t)).
Word psi(const StandardTableau& t);

}  // namespace sieve
