#pragma once

#include <string>
#include <vector>

namespace sieve {

// One worked example: a label, the expected rendering and what the library
// produced. Tableaux render as canonical JSON, words as digit strings.
struct GoldenVector {
    std::string name;
    std::string expected;
    std::string actual;

    bool pass() const { return expected == actual; }
};

// Replays every worked example. Exceptions are caught and rendered into
// `actual`, so a broken operation shows up as a failed vector.
std::vector<GoldenVector> golden_vectors();

}  // namespace sieve
