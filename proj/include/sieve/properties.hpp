#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sieve/tableau.hpp"
#include "sieve/word.hpp"

namespace sieve {

// Single-instance checks of the structural identities. Each returns true when
// the identity holds for the given input.

// p^N(T) = T, N the number of cells.
bool promotion_order_holds(const StandardTableau& t);
bool promotion_order_holds(const ShiftedStandardTableau& s);
// phi(p(S)) = c(phi(S)) on doubled staircases.
bool phi_equivariant_at(const ShiftedStandardTableau& s);
// H(p(Q)) = p(H(Q)) on squares.
bool h_equivariant_at(const StandardTableau& q);
// p(Q(w)) = Q(ebar(tail w) 1) and the same for Q', w a square word.
bool promotion_word_form_holds(const Word& w);
// Q(e_i w) = Q(w) and Q'(e_i w) = Q'(w); vacuously true when e_i is undefined.
bool crystal_invariance_holds(const Word& w, int i);
// Q(tail w) = delta Q(w) and Q'(tail w) = delta Q'(w).
bool recording_drop_first_holds(const Word& w);
// Cyclic descents of T equal those of psi(T).
bool descent_sets_agree(const StandardTableau& t);
// Cyclic descents shift down by one under rotation / promotion.
bool word_descent_shift_holds(const Word& w);
bool tableau_descent_shift_holds(const StandardTableau& t);

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool pass() const noexcept { return cases > 0 && failures == 0; }
};

struct PropertySuiteOptions {
    int n = 3;
    std::uint64_t seed = 1;
    // Random cases per property when not exhaustive.
    std::size_t samples = 500;
    // Iterate the full enumerations instead of sampling (n <= 4 only).
    bool exhaustive = false;
};

/// Runs every identity above over squares, staircases, square words and
/// random words of rank n. Identical options give identical results.
std::vector<PropertyResult> run_property_suite(const PropertySuiteOptions& options);

}  // namespace sieve
