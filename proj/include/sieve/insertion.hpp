#pragma once

#include "sieve/tableau.hpp"
#include "sieve/word.hpp"

namespace sieve {

// Row-insertion tableau: rows weakly increase, columns strictly increase.
class SemistandardTableau {
public:
    SemistandardTableau() = default;
    explicit SemistandardTableau(Rows rows) : rows_(std::move(rows)) {}

    const Rows& rows() const noexcept { return rows_; }
    Partition shape() const;

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
    Rows rows_;
};

struct InsertionPair {
    SemistandardTableau insertion;   // P(w)
    StandardTableau recording;       // Q(w)
};

// Robinson-Schensted-Knuth row insertion. Each letter bumps the leftmost
// entry strictly greater than it.
InsertionPair rsk(const Word& w);

/// Crystal raising operator e_j. Letters j+1 and j are read as "(" and ")",
/// matched brackets are discarded, and the last unmatched j becomes j+1.
/// Throws OperatorUndefined when no unmatched j remains.
Word crystal_e(const Word& w, int j);

// True when e_j is defined on w.
bool crystal_e_defined(const Word& w, int j);

// e_1(e_2(...e_{n-1}(w))), n = w.alphabet(). Throws OperatorUndefined naming
// the failing constituent.
Word ebar(const Word& w);

/// Length n^2, n copies of each letter, and every prefix has at least as many
/// (j+1)'s as j's.
bool is_square_word(const Word& w, int n);

// Reading w left to right, letter index i goes to the leftmost free cell of
// row n+1-w_i. Throws InvalidInput unless w is a square word.
StandardTableau yamanouchi_to_square(const Word& w, int n);

// Q'(w): the recording tableau Q(w) placed in the shifted plane and rectified.
ShiftedStandardTableau q_shifted(const Word& w);

}  // namespace sieve
