#pragma once

#include <set>
#include <vector>

#include "sieve/tableau.hpp"
#include "sieve/word.hpp"

namespace sieve {

/// An element of the hyperoctahedral group B_n in window notation
/// (w(1), ..., w(n)). Generators: s_1 changes the sign of position 1, s_i for
/// i >= 2 swaps positions i-1 and i. Words act by right multiplication.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);
    // w0 = (-1, -2, ..., -n).
    static SignedPermutation longest(int n);

    const std::vector<int>& window() const noexcept { return window_; }
    int rank() const noexcept { return static_cast<int>(window_.size()); }

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

// w * s_i. Throws InvalidInput when i is outside 1..n.
SignedPermutation apply_generator(const SignedPermutation& w, int i);

// inv(w) + sum of |w(i)| over negative entries.
int coxeter_length(const SignedPermutation& w);

// True when l(w * s_i) < l(w).
bool has_right_descent(const SignedPermutation& w, int i);

// Product of the generators in `word`, starting from the identity of B_n.
SignedPermutation evaluate(const Word& word, int n);

bool is_reduced_word_for_w0(const Word& w, int n);

// All reduced words of w0 in lexicographic order, built by peeling right
// descents off w0. Throws SizeGuardExceeded for n > max_n.
std::vector<Word> enumerate_reduced_words(int n, int max_n = 4);

// c(w) = w_2 ... w_l w_1.
Word rotate(const Word& w);
Word rotate(const Word& w, long long times);

struct DescentData {
    std::set<int> descents;          // {i : w_i > w_{i+1}}
    std::set<int> cyclic_descents;   // descents, plus 0 for the wrap-around
    long long maj = 0;               // sum of the non-cyclic descents

    friend bool operator==(const DescentData&, const DescentData&) = default;
};

DescentData descent_data(const Word& w);

/// Square tableau descents {i : i lies strictly above i+1}; the cyclic set
/// adds 0 when N-1 lies strictly above N in promote(T).
DescentData tableau_descent_data(const StandardTableau& t);

// {i - 1 mod m : i in s}.
std::set<int> shift_down_mod(const std::set<int>& s, int m);

}  // namespace sieve
