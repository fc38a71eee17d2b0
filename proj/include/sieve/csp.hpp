#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sieve/polynomial.hpp"
#include "sieve/promotion.hpp"

namespace sieve {

enum class SetKind {
    ReducedWords,       // R(w0) under rotation
    SquareTableaux,     // SYT(n x n) under promotion
    StaircaseTableaux,  // shifted SYT(2n-1, ..., 1) under promotion
};

std::string_view to_string(SetKind kind);
// "reduced-words", "square-tableaux", "staircase-tableaux".
SetKind parse_set_kind(std::string_view text);

struct CyclicActionSpec {
    SetKind set = SetKind::ReducedWords;
    int n = 1;

    int order() const noexcept { return n * n; }
};

struct FixedPointTable {
    // counts[d] = number of elements fixed by the d-th power of the action.
    std::vector<std::uint64_t> counts;

    friend bool operator==(const FixedPointTable&, const FixedPointTable&) = default;
};

struct CspReport {
    CyclicActionSpec spec;
    IntPolynomial polynomial;
    FixedPointTable table;
    // X(zeta^d); empty when the value is not an integer.
    std::vector<std::optional<BigInt>> evaluations;
    // Every element is fixed by the order-th power of the action.
    bool action_order_ok = false;
    // Values of d where the fixed-point count and evaluation disagree.
    std::vector<int> mismatches;

    bool pass() const noexcept { return action_order_ok && mismatches.empty(); }
};

// Exhaustive sets are limited to n <= max_n; beyond that SizeGuardExceeded.
struct HarnessLimit {
    int max_n = 4;
};

std::size_t set_size(const CyclicActionSpec& spec, HarnessLimit limit = {});

std::uint64_t fixed_points(const CyclicActionSpec& spec, int d, HarnessLimit limit = {});
FixedPointTable fixed_point_table(const CyclicActionSpec& spec, HarnessLimit limit = {});

/// The sieving polynomial for a set: q^{-n C(n,2)} times the maj generating
/// function of R(w0) for reduced words, the q-hook formula for both tableau
/// sets.
IntPolynomial csp_polynomial(const CyclicActionSpec& spec, HarnessLimit limit = {});

/// Compares |X^{c^d}| against X(zeta^d) for every d. Mismatches are reported,
/// not thrown.
CspReport verify_csp(const CyclicActionSpec& spec, HarnessLimit limit = {});

// Orbit census by explicit orbit traversal.
OrbitCensus orbit_census(const CyclicActionSpec& spec, HarnessLimit limit = {});

// Fixed-point counts implied by a census: an orbit of size k is fixed by
// the d-th power exactly when k divides d.
FixedPointTable table_from_census(const OrbitCensus& census, int order);

struct OrbitSummary {
    std::size_t orbit_size = 0;
    std::size_t count = 0;
    // Least element of each orbit, serialized (words as digit strings,
    // tableaux as canonical JSON).
    std::vector<std::string> representatives;
};

std::vector<OrbitSummary> orbit_summaries(const CyclicActionSpec& spec, HarnessLimit limit = {});

struct CrossCheckReport {
    int n = 0;
    OrbitCensus words;
    OrbitCensus squares;
    OrbitCensus staircases;
    bool censuses_equal = false;
    bool psi_image_is_r_w0 = false;
    bool psi_injective = false;
    bool psi_equivariant = false;  // psi(p(T)) = c(psi(T))
    bool phi_equivariant = false;  // phi(p(S)) = c(phi(S))
    bool h_equivariant = false;    // H(p(Q)) = p(H(Q))
    // First failing element, empty on success.
    std::string witness;

    bool pass() const noexcept {
        return censuses_equal && psi_image_is_r_w0 && psi_injective && psi_equivariant && phi_equivariant &&
               h_equivariant;
    }
};

CrossCheckReport cross_check(int n, HarnessLimit limit = {});

// {"set":...,"n":...,"poly":[...],"fixed_points":[...],"evaluations":[...],
//  "mismatches":[...],"verdict":"pass"|"fail"}
std::string to_json(const CspReport& report);
// [{"orbit_size":k,"count":m,"representatives":[...]}, ...]
std::string to_json(const std::vector<OrbitSummary>& summaries);
std::string to_json(const CrossCheckReport& report);
// {"coeffs":[...]}; coefficients beyond 64 bits are written as strings.
std::string to_json(const IntPolynomial& p);

}  // namespace sieve
