#include "sieve/qanalog.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "sieve/errors.hpp"

namespace sieve {

IntPolynomial q_int(int k) {
    if (k < 0) throw InvalidInput("q-integer of a negative number");
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

IntPolynomial q_factorial(int k) {
    if (k < 0) throw InvalidInput("q-factorial of a negative number");
    IntPolynomial f(BigInt(1));
    for (int i = 2; i <= k; ++i) f *= q_int(i);
    return f;
}

IntPolynomial q_hook(const Partition& shape) {
    IntPolynomial denom(BigInt(1));
    for (const auto& row : hook_lengths(shape)) {
        for (int h : row) denom *= q_int(h);
    }
    return exact_divide(q_factorial(shape.size()), denom);
}

IntPolynomial q_hook_rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("rectangle sides must be nonnegative");
    if (rows == 0 || cols == 0) return IntPolynomial(BigInt(1));
    return q_hook(Partition(std::vector<int>(rows, cols)));
}

IntPolynomial q_hook_square_closed_form(int n) {
    if (n < 0) throw InvalidInput("square side must be nonnegative");
    IntPolynomial denom(BigInt(1));
    for (int k = 0; k < n; ++k) denom *= q_int(n);
    for (int i = 1; i < n; ++i) {
        const auto factor = q_int(i) * q_int(2 * n - i);
        for (int k = 0; k < i; ++k) denom *= factor;
    }
    return exact_divide(q_factorial(n * n), denom);
}

long long kappa(const Partition& shape) {
    long long k = 0;
    for (int i = 1; i <= shape.length(); ++i) k += static_cast<long long>(i - 1) * shape[i];
    return k;
}

IntPolynomial maj_gf(std::span<const long long> majors) {
    if (majors.empty()) return {};
    long long top = 0;
    for (long long m : majors) {
        if (m < 0) throw InvalidInput("major index must be nonnegative");
        top = std::max(top, m);
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(top) + 1, BigInt(0));
    for (long long m : majors) coeffs[static_cast<std::size_t>(m)] += 1;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial cyclotomic(int m) {
    if (m < 1) throw InvalidInput("cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    auto result = IntPolynomial::monomial(static_cast<std::size_t>(m)) - IntPolynomial(BigInt(1));
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) result = exact_divide(result, cyclotomic(d));
    }
    std::lock_guard lock(mutex);
    cache.emplace(m, result);
    return result;
}

BigInt eval_at_root(const IntPolynomial& p, int m, int d) {
    if (m < 1 || d < 0 || d >= m) throw InvalidInput("eval_at_root needs m >= 1 and 0 <= d < m");
    const int order = m / std::gcd(m, d);
    auto residue = divide(p, cyclotomic(order)).remainder;
    if (!residue.is_constant()) {
        throw NonIntegerValue("value at zeta^" + std::to_string(d) + " (order " + std::to_string(m) +
                                  ") is not an integer; residue " + to_string(residue),
                              residue.coeffs());
    }
    return residue.coeff(0);
}

}  // namespace sieve
