#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "sieve/polynomial.hpp"
#include "sieve/tableau.hpp"

namespace sieve {

// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
IntPolynomial q_int(int k);
// [k]_q! = [k]_q [k-1]_q ... [1]_q; [0]_q! = 1.
IntPolynomial q_factorial(int k);

// [N]_q! / prod [h(i,j)]_q by exact division.
IntPolynomial q_hook(const Partition& shape);
IntPolynomial q_hook_rectangle(int rows, int cols);

// Closed form for n x n squares:
// [n^2]_q! / ([n]_q^n prod_{i=1}^{n-1} ([i]_q [2n-i]_q)^i).
IntPolynomial q_hook_square_closed_form(int n);

// sum (i-1) * lambda_i.
long long kappa(const Partition& shape);

// sum over x of q^{maj(x)}.
IntPolynomial maj_gf(std::span<const long long> majors);

// m-th cyclotomic polynomial: (q^m - 1) / prod_{d | m, d < m} Phi_d.
IntPolynomial cyclotomic(int m);

// p(zeta^d) for zeta a primitive m-th root of unity is not an integer.
class NonIntegerValue : public std::domain_error {
public:
    NonIntegerValue(const std::string& what, std::vector<BigInt> residue)
        : std::domain_error(what), residue_(std::move(residue)) {}

    // Coefficients of p mod Phi_{m/gcd(m,d)}.
    const std::vector<BigInt>& residue() const noexcept { return residue_; }

private:
    std::vector<BigInt> residue_;
};

/// Exact p(zeta^d), zeta a primitive m-th root of unity, 0 <= d < m. zeta^d
/// has order k = m / gcd(m, d), so p is reduced modulo Phi_k; the value is an
/// integer exactly when the residue is constant.
BigInt eval_at_root(const IntPolynomial& p, int m, int d);

}  // namespace sieve
