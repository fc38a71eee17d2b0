#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "sieve/errors.hpp"
#include "sieve/tableau.hpp"

namespace sieve {

// Jeu de taquin promotion: remove 1, decrement, slide the hole outward by the
// min-of-right-and-below rule, refill with N.
StandardTableau promote(const StandardTableau& t);
ShiftedStandardTableau promote(const ShiftedStandardTableau& t);

// Remove N, increment, slide the hole back to (1,1) by the
// max-of-left-and-above rule, place 1.
StandardTableau promote_inverse(const StandardTableau& t);
ShiftedStandardTableau promote_inverse(const ShiftedStandardTableau& t);

template <class Tableau>
struct DeltaResult {
    // Entries 1..N-1 on the original shape minus the vacated corner.
    Tableau remainder;
    // Vacated outer corner, in the tableau's own coordinates.
    Cell hole;
};

// Promotion without the final refill.
DeltaResult<StandardTableau> delta(const StandardTableau& t);
DeltaResult<ShiftedStandardTableau> delta(const ShiftedStandardTableau& t);

// Places an n x n square in the shifted plane with row i occupying shifted
// columns n .. 2n-1: outer (2n-1, ..., n), inner (n-1, ..., 0).
SkewShiftedStandardTableau embed_square(const StandardTableau& q);

// Same placement for an arbitrary straight shape with l rows: every row is
// moved to start at shifted column l.
SkewShiftedStandardTableau embed_straight(const StandardTableau& q);

// Rectification by forward slides into inner corners, bottom-most corner first.
ShiftedStandardTableau rectify(const SkewShiftedStandardTableau& s);
// Same, choosing the next inner corner uniformly at random.
ShiftedStandardTableau rectify_random(const SkewShiftedStandardTableau& s, std::mt19937_64& rng);

template <class T>
struct Orbit {
    // Elements in action order starting at the least element.
    std::vector<T> elements;

    const T& representative() const { return elements.front(); }
    std::size_t size() const noexcept { return elements.size(); }
};

// Orbit size -> number of orbits of that size.
using OrbitCensus = std::map<std::size_t, std::size_t>;

/// Splits `set` into orbits of `action`. Orbits come out ordered by their
/// least element; each lists its elements starting there. Throws InvalidInput
/// if the action leaves the set.
template <class T, class Action>
std::vector<Orbit<T>> orbits(std::span<const T> set, Action&& action) {
    std::vector<T> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<bool> seen(sorted.size(), false);
    auto index_of = [&](const T& x) -> std::size_t {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        if (it == sorted.end() || !(*it == x)) throw InvalidInput("set is not closed under the action");
        return static_cast<std::size_t>(it - sorted.begin());
    };

    std::vector<Orbit<T>> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (seen[i]) continue;
        Orbit<T> orbit;
        T x = sorted[i];
        std::size_t k = i;
        do {
            seen[k] = true;
            orbit.elements.push_back(x);
            x = action(x);
            k = index_of(x);
        } while (k != i && !seen[k]);
        if (k != i) throw InvalidInput("action is not a permutation of the set");
        out.push_back(std::move(orbit));
    }
    return out;
}

template <class T>
OrbitCensus census(const std::vector<Orbit<T>>& orbits) {
    OrbitCensus c;
    for (const auto& o : orbits) ++c[o.size()];
    return c;
}

// Promotion orbits of a tableau set.
template <class Tableau>
std::vector<Orbit<Tableau>> promotion_orbits(std::span<const Tableau> set) {
    return orbits(set, [](const Tableau& t) { return promote(t); });
}

template <class Tableau>
Tableau promote_power(Tableau t, long long k) {
    for (long long i = 0; i < k; ++i) t = promote(t);
    return t;
}

}  // namespace sieve
