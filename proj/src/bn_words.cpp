#include "sieve/bn_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "sieve/errors.hpp"
#include "sieve/promotion.hpp"

namespace sieve {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
        const auto a = static_cast<std::size_t>(std::abs(v));
        if (a < 1 || a > window_.size() || seen[a]) {
            throw InvalidInput("window must be a signed permutation of 1..n");
        }
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -(i + 1);
    return SignedPermutation(std::move(w));
}

SignedPermutation apply_generator(const SignedPermutation& w, int i) {
    if (i < 1 || i > w.rank()) {
        throw InvalidInput("generator s_" + std::to_string(i) + " outside 1.." + std::to_string(w.rank()));
    }
    auto window = w.window();
    if (i == 1) {
        window[0] = -window[0];
    } else {
        std::swap(window[i - 2], window[i - 1]);
    }
    return SignedPermutation(std::move(window));
}

int coxeter_length(const SignedPermutation& w) {
    const auto& v = w.window();
    int length = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] > v[j]) ++length;
        }
        if (v[i] < 0) length -= v[i];
    }
    return length;
}

bool has_right_descent(const SignedPermutation& w, int i) {
    const auto& v = w.window();
    if (i < 1 || i > w.rank()) throw InvalidInput("generator index out of range");
    return i == 1 ? v[0] < 0 : v[i - 2] > v[i - 1];
}

SignedPermutation evaluate(const Word& word, int n) {
    auto w = SignedPermutation::identity(n);
    for (int a : word.letters()) w = apply_generator(w, a);
    return w;
}

bool is_reduced_word_for_w0(const Word& w, int n) {
    if (n < 1 || w.length() != static_cast<std::size_t>(n) * n) return false;
    auto g = SignedPermutation::identity(n);
    int length = 0;
    for (int a : w.letters()) {
        if (a < 1 || a > n) return false;
        g = apply_generator(g, a);
        const int next = coxeter_length(g);
        if (next != length + 1) return false;
        length = next;
    }
    return g == SignedPermutation::longest(n);
}

std::vector<Word> enumerate_reduced_words(int n, int max_n) {
    if (n < 1) throw InvalidInput("rank must be positive");
    if (n > max_n) {
        throw SizeGuardExceeded("reduced-word enumeration for n = " + std::to_string(n) + " exceeds the limit n <= " +
                                std::to_string(max_n));
    }
    std::vector<Word> out;
    std::vector<int> suffix(static_cast<std::size_t>(n) * n);
    auto peel = [&](auto&& self, const SignedPermutation& w, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(suffix, n);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (!has_right_descent(w, i)) continue;
            suffix[remaining - 1] = i;
            self(self, apply_generator(w, i), remaining - 1);
        }
    };
    peel(peel, SignedPermutation::longest(n), n * n);
    std::sort(out.begin(), out.end());
    return out;
}

Word rotate(const Word& w) {
    if (w.empty()) throw InvalidInput("rotate of the empty word");
    auto letters = w.letters();
    std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    return Word(std::move(letters), w.alphabet());
}

Word rotate(const Word& w, long long times) {
    if (w.empty()) throw InvalidInput("rotate of the empty word");
    auto letters = w.letters();
    const auto shift = static_cast<std::size_t>(((times % static_cast<long long>(letters.size())) +
                                                 static_cast<long long>(letters.size())) %
                                                static_cast<long long>(letters.size()));
    std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift), letters.end());
    return Word(std::move(letters), w.alphabet());
}

DescentData descent_data(const Word& w) {
    if (w.empty()) throw InvalidInput("descent data of the empty word");
    DescentData d;
    const auto& a = w.letters();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] > a[i + 1]) {
            d.descents.insert(static_cast<int>(i) + 1);
            d.maj += static_cast<long long>(i) + 1;
        }
    }
    d.cyclic_descents = d.descents;
    if (a.back() > a.front()) d.cyclic_descents.insert(0);
    return d;
}

DescentData tableau_descent_data(const StandardTableau& t) {
    if (!t.is_square()) throw InvalidInput("tableau descent data needs a square tableau");
    DescentData d;
    const int total = t.size();
    for (int i = 1; i < total; ++i) {
        if (t.find(i).row < t.find(i + 1).row) {
            d.descents.insert(i);
            d.maj += i;
        }
    }
    d.cyclic_descents = d.descents;
    const auto p = promote(t);
    if (total > 1 && p.find(total - 1).row < p.find(total).row) d.cyclic_descents.insert(0);
    return d;
}

std::set<int> shift_down_mod(const std::set<int>& s, int m) {
    std::set<int> out;
    for (int i : s) out.insert(((i - 1) % m + m) % m);
    return out;
}

}  // namespace sieve
