#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "sieve/bn_words.hpp"
#include "sieve/errors.hpp"
#include "sieve/qanalog.hpp"

using namespace sieve;

namespace {

IntPolynomial P(std::initializer_list<int> c) {
    std::vector<BigInt> v;
    for (int x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

// Floating point p(exp(2 pi i d / m)).
std::complex<double> eval_complex(const IntPolynomial& p, int m, int d) {
    const double theta = 2 * std::numbers::pi * d / m;
    std::complex<double> z(std::cos(theta), std::sin(theta)), acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->convert_to<double>();
    return acc;
}

long long tableau_maj(const StandardTableau& t) {
    long long m = 0;
    for (int i = 1; i < t.size(); ++i) {
        if (t.find(i + 1).row > t.find(i).row) m += i;
    }
    return m;
}

}  // namespace

TEST_CASE("q-integers and factorials") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == P({1}));
    CHECK(q_int(3) == P({1, 1, 1}));
    CHECK(q_factorial(0) == P({1}));
    CHECK(q_factorial(3) == P({1, 2, 2, 1}));
    CHECK(q_factorial(5)(BigInt(1)) == 120);
    CHECK_THROWS_AS(q_int(-1), InvalidInput);
    CHECK_THROWS_AS(q_factorial(-2), InvalidInput);
}

TEST_CASE("polynomial arithmetic") {
    const auto a = P({1, 1});
    CHECK(a * a == P({1, 2, 1}));
    CHECK(a - a == IntPolynomial());
    CHECK(exact_divide(P({1, 2, 1}), a) == a);
    CHECK_THROWS_AS(exact_divide(P({1, 0, 1}), a), ArithmeticError);
    const auto r = divide(P({1, 0, 1}), a);
    CHECK(r.quotient == P({-1, 1}));
    CHECK(r.remainder == P({2}));
    CHECK(shift_down(P({0, 0, 3, 1}), 2) == P({3, 1}));
    CHECK_THROWS_AS(shift_down(P({1, 1}), 1), ArithmeticError);
    CHECK(to_string(P({1, 0, 1, 2})) == "1 + q^2 + 2q^3");
    CHECK(to_string(P({-1, 1})) == "-1 + q");
    CHECK(to_string(IntPolynomial()) == "0");
    CHECK(to_string(P({0, -3})) == "-3q");
}

TEST_CASE("q-hook formula") {
    CHECK(q_hook_rectangle(1, 1) == P({1}));
    CHECK(q_hook_rectangle(2, 2) == P({1, 0, 1}));
    const auto x3 = q_hook_rectangle(3, 3);
    CHECK(x3 == P({1, 0, 1, 2, 2, 2, 4, 3, 4, 4, 4, 3, 4, 2, 2, 2, 1, 0, 1}));
    CHECK(to_string(x3) ==
          "1 + q^2 + 2q^3 + 2q^4 + 2q^5 + 4q^6 + 3q^7 + 4q^8 + 4q^9 + 4q^10 + 3q^11 + 4q^12 + 2q^13 + 2q^14 + "
          "2q^15 + q^16 + q^18");
    for (int n = 0; n <= 7; ++n) {
        CHECK(q_hook_square_closed_form(n) == q_hook_rectangle(n, n));
        CHECK(q_hook_rectangle(n, n)(BigInt(1)) == count_syt(square_shape(n)));
    }
    CHECK(q_hook(Partition({3, 1}))(BigInt(1)) == 3);
    CHECK(q_hook(Partition())(BigInt(1)) == 1);
}

TEST_CASE("maj generating function of SYT matches the q-hook formula") {
    const std::vector<Partition> shapes{Partition({1}),       Partition({2, 1}),    Partition({3, 2}),
                                        Partition({3, 2, 1}), Partition({4, 2, 1}), Partition({3, 3}),
                                        Partition({2, 2, 2}), Partition({4, 4}),    Partition({4, 3, 2, 1})};
    for (const auto& shape : shapes) {
        std::vector<long long> majors;
        for (const auto& t : enumerate_syt(shape)) majors.push_back(tableau_maj(t));
        CHECK(maj_gf(majors) == IntPolynomial::monomial(static_cast<std::size_t>(kappa(shape))) * q_hook(shape));
    }
    CHECK(kappa(Partition({3, 3, 3})) == 9);
    CHECK(kappa(Partition({4, 2, 1})) == 4);
}

TEST_CASE("maj generating function of reduced words") {
    CHECK(maj_gf(std::vector<long long>{}).is_zero());
    CHECK(maj_gf(std::vector<long long>{0, 2, 2}) == P({1, 0, 2}));
    CHECK_THROWS_AS(maj_gf(std::vector<long long>{-1}), InvalidInput);
    for (int n = 1; n <= 4; ++n) {
        std::vector<long long> majors;
        for (const auto& w : enumerate_reduced_words(n)) majors.push_back(descent_data(w).maj);
        const auto shift = static_cast<std::size_t>(n * n * (n - 1) / 2);
        CHECK(shift_down(maj_gf(majors), shift) == q_hook_rectangle(n, n));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(4) == P({1, 0, 1}));
    CHECK(cyclotomic(9) == P({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic(105).coeff(7) == -2);
    CHECK_THROWS_AS(cyclotomic(0), InvalidInput);
    for (int m = 1; m <= 100; ++m) {
        IntPolynomial prod(BigInt(1));
        for (int d = 1; d <= m; ++d) {
            if (m % d == 0) prod *= cyclotomic(d);
        }
        REQUIRE(prod == IntPolynomial::monomial(static_cast<std::size_t>(m)) - P({1}));
    }
}

TEST_CASE("evaluation at roots of unity") {
    const auto x3 = q_hook_rectangle(3, 3);
    const std::vector<int> expected{42, 0, 0, 6, 0, 0, 6, 0, 0};
    for (int d = 0; d < 9; ++d) CHECK(eval_at_root(x3, 9, d) == expected[d]);
    CHECK(eval_at_root(P({1, 0, 1}), 4, 1) == 0);
    CHECK(eval_at_root(P({1, 0, 1}), 4, 2) == 2);
    CHECK(eval_at_root(P({1, 0, 1}), 4, 0) == 2);
    CHECK_THROWS_AS(eval_at_root(P({1}), 0, 0), InvalidInput);
    CHECK_THROWS_AS(eval_at_root(P({1}), 3, 3), InvalidInput);
    try {
        eval_at_root(P({0, 1}), 3, 1);
        FAIL("expected NonIntegerValue");
    } catch (const NonIntegerValue& e) {
        CHECK(e.residue().size() == 2);
        CHECK(e.residue()[1] == 1);
    }
}

TEST_CASE("exact evaluation agrees with floating point") {
    for (int n = 1; n <= 6; ++n) {
        const auto x = q_hook_rectangle(n, n);
        const int m = n * n;
        // Cancellation error grows with the coefficient sum X(1).
        const double scale = 1e-12 * x(BigInt(1)).convert_to<double>();
        BigInt total = 0;
        for (int d = 0; d < m; ++d) {
            const auto exact = eval_at_root(x, m, d);
            total += exact;
            const auto z = eval_complex(x, m, d);
            CHECK(std::abs(z.real() - exact.convert_to<double>()) < scale + 1e-9);
            CHECK(std::abs(z.imag()) < scale + 1e-9);
        }
        // Burnside: the number of orbits is an integer.
        CHECK(total % m == 0);
    }
}
