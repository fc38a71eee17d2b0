#include "sieve/haiman.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "sieve/bn_words.hpp"
#include "sieve/errors.hpp"
#include "sieve/promotion.hpp"

namespace sieve {

namespace {

int staircase_rank(const StrictPartition& shape) {
    const int n = shape.length();
    if (shape != doubled_staircase(n)) throw InvalidInput("expected a doubled staircase shape");
    return n;
}

// Inverse tables for one rank, built once from the forward maps.
struct InverseTables {
    std::map<Word, ShiftedStandardTableau> phi_inv;
    std::map<ShiftedStandardTableau, StandardTableau> h_inv;
};

const InverseTables& tables_for(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const InverseTables>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        if (n > 4) throw SizeGuardExceeded("inverse tables are limited to n <= 4");
        auto tables = std::make_unique<InverseTables>();
        for (const auto& s : enumerate_shifted_syt(doubled_staircase(n))) tables->phi_inv.emplace(phi(s), s);
        for (const auto& q : enumerate_syt(square_shape(n))) tables->h_inv.emplace(haiman_h(q), q);
        slot = std::move(tables);
    }
    return *slot;
}

}  // namespace

int bottom_up_row_of_max(const ShiftedStandardTableau& s) {
    return s.num_rows() + 1 - s.find(s.size()).row;
}

Word phi(const ShiftedStandardTableau& s) {
    const int n = staircase_rank(s.shape());
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n) * n);
    auto current = s;
    for (int i = 0; i < n * n; ++i) {
        current = promote(current);
        letters.push_back(bottom_up_row_of_max(current));
    }
    return Word(std::move(letters), n);
}

ShiftedStandardTableau phi_inverse(const Word& w) {
    const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(w.length()))));
    if (n < 1 || !is_reduced_word_for_w0(w, n)) throw InvalidInput(to_string(w) + " is not a reduced word for w0");
    const auto& table = tables_for(n).phi_inv;
    return table.at(Word(w.letters(), n));
}

ShiftedStandardTableau haiman_h(const StandardTableau& q) {
    return rectify(embed_square(q));
}

StandardTableau haiman_h_inverse(const ShiftedStandardTableau& s) {
    const int n = staircase_rank(s.shape());
    const auto& table = tables_for(n).h_inv;
    auto it = table.find(s);
    if (it == table.end()) throw ArithmeticError("staircase tableau missing from the image of H");
    return it->second;
}

Word psi(const StandardTableau& t) { return phi(haiman_h(t)); }

}  // namespace sieve
