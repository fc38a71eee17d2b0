#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "sieve/errors.hpp"
#include "sieve/insertion.hpp"
#include "sieve/promotion.hpp"
#include "sieve/random.hpp"

using namespace sieve;

namespace {

Word w(const char* digits, int alphabet = 0) { return parse_word(digits, alphabet); }

// All words of the given length over 1..n, in lexicographic order.
std::vector<Word> all_words(int n, std::size_t length) {
    std::vector<Word> out;
    std::vector<int> letters(length, 1);
    for (;;) {
        out.emplace_back(letters, n);
        std::size_t i = length;
        while (i > 0 && letters[i - 1] == n) letters[--i] = 1;
        if (i == 0) break;
        ++letters[i - 1];
    }
    return out;
}

// Superstandard square: row i is all i's.
bool inserts_to_superstandard(const Word& word, int n) {
    const auto p = rsk(word).insertion.rows();
    if (static_cast<int>(p.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (p[i] != std::vector<int>(n, i + 1)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("words") {
    CHECK(to_string(w("332132121")) == "332132121");
    CHECK(w("332132121").alphabet() == 3);
    CHECK(to_string(parse_word("1,10,3")) == "1,10,3");
    CHECK(w("121", 3).tail() == w("21", 3));
    CHECK(w("12", 2).appended(1) == w("121", 2));
    CHECK_THROWS_AS(parse_word("12a"), InvalidInput);
    CHECK_THROWS_AS(parse_word("1,,2"), InvalidInput);
    CHECK_THROWS_AS(Word({0, 1}, 2), InvalidInput);
    CHECK_THROWS_AS(Word({3}, 2), InvalidInput);
}

TEST_CASE("rsk") {
    const auto pair = rsk(w("332132121"));
    CHECK(pair.recording == StandardTableau({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}}));
    CHECK(pair.insertion.rows() == Rows{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});

    const auto one = rsk(w("1"));
    CHECK(one.insertion.rows() == Rows{{1}});
    CHECK(one.recording == StandardTableau({{1}}));

    const auto two = rsk(w("21"));
    CHECK(two.insertion.rows() == Rows{{1}, {2}});
    CHECK(two.recording == StandardTableau({{1}, {2}}));

    // Equal letters stay in one row.
    CHECK(rsk(w("1122")).insertion.rows() == Rows{{1, 1, 2, 2}});
}

TEST_CASE("crystal_e") {
    CHECK(crystal_e(w("3121221332"), 2) == w("3121231332"));
    CHECK_THROWS_AS(crystal_e(w("2", 2), 1), OperatorUndefined);
    CHECK(crystal_e(w("12"), 1) == w("22"));
    CHECK(!crystal_e_defined(w("21"), 1));
    CHECK_THROWS_AS(crystal_e(w("12"), 2), OperatorUndefined);
    try {
        (void)crystal_e(w("221", 2), 1);
        FAIL("expected OperatorUndefined");
    } catch (const OperatorUndefined& e) {
        CHECK(e.letter() == 1);
    }
}

TEST_CASE("ebar") {
    const auto square = w("332132121");
    const auto next = ebar(square.tail()).appended(1);
    CHECK(is_square_word(next, 3));
    CHECK(inserts_to_superstandard(ebar(w("32132121", 3)).appended(1), 3));
    CHECK(ebar(w("1111", 1)) == w("1111", 1));
    // e_2 succeeds, then e_1 has no unmatched 1.
    try {
        (void)ebar(w("2", 3));
        FAIL("expected OperatorUndefined");
    } catch (const OperatorUndefined& e) {
        CHECK(e.letter() == 1);
    }
}

TEST_CASE("square words") {
    CHECK(is_square_word(w("332132121"), 3));
    CHECK(!is_square_word(w("112233"), 3));
    CHECK(!is_square_word(w("123123123"), 3));

    std::set<Word> found;
    for (const auto& word : all_words(2, 4)) {
        if (is_square_word(word, 2)) found.insert(word);
    }
    CHECK(found == std::set<Word>{w("2211"), w("2121")});

    // The prefix definition and the insertion characterisation agree.
    for (int n = 1; n <= 3; ++n) {
        std::size_t count = 0;
        for (const auto& word : all_words(n, static_cast<std::size_t>(n) * n)) {
            const bool square = is_square_word(word, n);
            REQUIRE(square == inserts_to_superstandard(word, n));
            count += square;
        }
        CHECK(count == enumerate_syt(square_shape(n)).size());
    }
}

TEST_CASE("yamanouchi_to_square agrees with the recording tableau") {
    CHECK(yamanouchi_to_square(w("332132121"), 3) == StandardTableau({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}}));
    CHECK(yamanouchi_to_square(w("1"), 1) == StandardTableau({{1}}));
    CHECK_THROWS_AS(yamanouchi_to_square(w("123123123"), 3), InvalidInput);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& word : all_words(n, static_cast<std::size_t>(n) * n)) {
            if (is_square_word(word, n)) REQUIRE(yamanouchi_to_square(word, n) == rsk(word).recording);
        }
    }
}

TEST_CASE("q_shifted") {
    CHECK(q_shifted(w("332132121")) == ShiftedStandardTableau({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}}));
    CHECK(q_shifted(w("1")) == ShiftedStandardTableau({{1}}));
    for (const auto& t : enumerate_syt(square_shape(3))) {
        const auto word = square_word_of(t);
        REQUIRE(q_shifted(word) == rectify(embed_square(rsk(word).recording)));
    }
}

TEST_CASE("recording tableaux are invariant under crystal operators") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> alphabet(2, 4);
    std::uniform_int_distribution<std::size_t> length(1, 14);
    int checked = 0;
    while (checked < 100) {
        const auto word = random_word(alphabet(rng), length(rng), rng);
        for (int i = 1; i < word.alphabet(); ++i) {
            if (!crystal_e_defined(word, i)) continue;
            const auto raised = crystal_e(word, i);
            REQUIRE(rsk(raised).recording == rsk(word).recording);
            REQUIRE(q_shifted(raised) == q_shifted(word));
            ++checked;
        }
    }
}

TEST_CASE("dropping the first letter acts as delta on recording tableaux") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> alphabet(1, 4);
    std::uniform_int_distribution<std::size_t> length(1, 16);
    for (int i = 0; i < 200; ++i) {
        const auto word = random_word(alphabet(rng), length(rng), rng);
        const auto d = delta(rsk(word).recording);
        REQUIRE(d.remainder == rsk(word.tail()).recording);
        const auto ds = delta(q_shifted(word));
        REQUIRE(ds.remainder == q_shifted(word.tail()));
    }
}

TEST_CASE("promotion in word form on square words") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_syt(square_shape(n))) {
            const auto word = square_word_of(t);
            const auto next = ebar(word.tail()).appended(1);
            REQUIRE(is_square_word(next, n));
            REQUIRE(promote(rsk(word).recording) == rsk(next).recording);
            REQUIRE(promote(q_shifted(word)) == q_shifted(next));
        }
    }
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
        const auto word = square_word_of(random_syt(square_shape(4), rng));
        const auto next = ebar(word.tail()).appended(1);
        REQUIRE(promote(rsk(word).recording) == rsk(next).recording);
        REQUIRE(promote(q_shifted(word)) == q_shifted(next));
    }
}
