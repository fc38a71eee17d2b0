#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sieve/bigint.hpp"
#include "sieve/errors.hpp"

namespace sieve {

/// Dense univariate polynomial in q with coefficients in an integral domain.
/// coeffs()[k] is the coefficient of q^k; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Coeff& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, const Coeff& c = Coeff(1)) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
    const Coeff& leading() const { return coeffs_.back(); }

    Coeff operator()(const Coeff& x) const {
        Coeff acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

template <class Coeff>
struct DivisionResult {
    Polynomial<Coeff> quotient;
    Polynomial<Coeff> remainder;
};

/// Long division over the coefficient ring. Every step must divide by the
/// divisor's leading coefficient exactly; otherwise ArithmeticError.
template <class Coeff>
DivisionResult<Coeff> divide(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<Coeff> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {Polynomial<Coeff>(), a};
    std::vector<Coeff> quot(rem.size() - db, Coeff(0));
    const Coeff& lead = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        if (rem[k] % lead != 0) throw ArithmeticError("leading coefficient does not divide exactly");
        const Coeff factor = rem[k] / lead;
        quot[k - db] = factor;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= factor * b.coeffs()[i];
    }
    return {Polynomial<Coeff>(std::move(quot)), Polynomial<Coeff>(std::move(rem))};
}

// a / b, failing loudly on a nonzero remainder.
template <class Coeff>
Polynomial<Coeff> exact_divide(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw ArithmeticError("polynomial division left a nonzero remainder");
    return q;
}

// p / q^k. Throws ArithmeticError unless q^k divides p.
template <class Coeff>
Polynomial<Coeff> shift_down(const Polynomial<Coeff>& p, std::size_t k) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < std::min(k, c.size()); ++i) {
        if (c[i] != 0) throw ArithmeticError("q^" + std::to_string(k) + " does not divide the polynomial");
    }
    if (k >= c.size()) return {};
    return Polynomial<Coeff>(std::vector<Coeff>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

/// Sparse ascending form, e.g. "1 + q^2 + 2q^3", "-1 + q". The zero
/// polynomial prints as "0".
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Coeff c = p.coeffs()[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0 || c != 1) out << c;
        if (k >= 1) out << 'q';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

using IntPolynomial = Polynomial<BigInt>;

}  // namespace sieve
