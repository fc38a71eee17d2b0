#include "sieve/insertion.hpp"

#include <algorithm>
#include <string>

#include "sieve/errors.hpp"
#include "sieve/promotion.hpp"

namespace sieve {

namespace {

// Positions (0-indexed) of the unmatched j's after bracket matching.
std::vector<std::size_t> unmatched_lower(const Word& w, int j) {
    std::vector<std::size_t> open;    // unmatched j+1
    std::vector<std::size_t> closers; // unmatched j
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int a = w.letters()[i];
        if (a == j + 1) {
            open.push_back(i);
        } else if (a == j) {
            if (open.empty()) {
                closers.push_back(i);
            } else {
                open.pop_back();
            }
        }
    }
    return closers;
}

}  // namespace

Partition SemistandardTableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

InsertionPair rsk(const Word& w) {
    Rows p;
    Rows q;
    for (std::size_t i = 0; i < w.length(); ++i) {
        int x = w.letters()[i];
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(x, *it);
        }
        q[r].push_back(static_cast<int>(i) + 1);
    }
    return {SemistandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

bool crystal_e_defined(const Word& w, int j) {
    return j >= 1 && j < w.alphabet() && !unmatched_lower(w, j).empty();
}

Word crystal_e(const Word& w, int j) {
    if (j < 1 || j >= w.alphabet()) {
        throw OperatorUndefined("e_" + std::to_string(j) + " is not an operator on alphabet 1.." +
                                    std::to_string(w.alphabet()),
                                j);
    }
    const auto closers = unmatched_lower(w, j);
    if (closers.empty()) {
        throw OperatorUndefined("e_" + std::to_string(j) + " undefined on " + to_string(w) + ": no unmatched " +
                                    std::to_string(j),
                                j);
    }
    auto letters = w.letters();
    letters[closers.back()] = j + 1;
    return Word(std::move(letters), w.alphabet());
}

Word ebar(const Word& w) {
    Word out = w;
    for (int j = w.alphabet() - 1; j >= 1; --j) out = crystal_e(out, j);
    return out;
}

bool is_square_word(const Word& w, int n) {
    if (n < 1 || w.length() != static_cast<std::size_t>(n) * n) return false;
    std::vector<int> count(static_cast<std::size_t>(n) + 2, 0);
    for (int a : w.letters()) {
        if (a < 1 || a > n) return false;
        ++count[a];
        if (a < n && count[a] > count[a + 1]) return false;
    }
    return std::all_of(count.begin() + 1, count.begin() + n + 1, [n](int c) { return c == n; });
}

StandardTableau yamanouchi_to_square(const Word& w, int n) {
    if (!is_square_word(w, n)) throw InvalidInput(to_string(w) + " is not a square word");
    Rows rows(n);
    for (std::size_t i = 0; i < w.length(); ++i) rows[n - w.letters()[i]].push_back(static_cast<int>(i) + 1);
    return StandardTableau(std::move(rows));
}

ShiftedStandardTableau q_shifted(const Word& w) {
    return rectify(embed_straight(rsk(w).recording));
}

}  // namespace sieve
