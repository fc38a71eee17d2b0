#pragma once

#include <random>

#include "sieve/tableau.hpp"
#include "sieve/word.hpp"

namespace sieve {

// Places 1..N one at a time into a uniformly chosen addable cell. Every
// standard tableau of the shape has positive probability; the distribution is
// not uniform.
StandardTableau random_syt(const Partition& shape, std::mt19937_64& rng);
ShiftedStandardTableau random_shifted_syt(const StrictPartition& shape, std::mt19937_64& rng);

// Uniform word of the given length over 1..alphabet.
Word random_word(int alphabet, std::size_t length, std::mt19937_64& rng);

// The square word read off a square tableau: letter i is n + 1 - row(i).
Word square_word_of(const StandardTableau& t);

}  // namespace sieve
