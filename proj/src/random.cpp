#include "sieve/random.hpp"

#include "sieve/errors.hpp"

namespace sieve {

namespace {

Rows random_filling(const std::vector<int>& starts, const std::vector<int>& lengths, std::mt19937_64& rng) {
    const auto rows = lengths.size();
    Rows filling(rows);
    std::vector<int> filled(rows, 0);
    int total = 0;
    for (int len : lengths) total += len;
    std::vector<std::size_t> addable;
    for (int entry = 1; entry <= total; ++entry) {
        addable.clear();
        for (std::size_t r = 0; r < rows; ++r) {
            if (filled[r] == lengths[r]) continue;
            if (r > 0 && starts[r] + filled[r] >= starts[r - 1] + filled[r - 1]) continue;
            addable.push_back(r);
        }
        const auto r = addable[std::uniform_int_distribution<std::size_t>(0, addable.size() - 1)(rng)];
        filling[r].push_back(entry);
        ++filled[r];
    }
    return filling;
}

}  // namespace

StandardTableau random_syt(const Partition& shape, std::mt19937_64& rng) {
    return StandardTableau(random_filling(std::vector<int>(shape.length(), 0), shape.parts(), rng));
}

ShiftedStandardTableau random_shifted_syt(const StrictPartition& shape, std::mt19937_64& rng) {
    std::vector<int> starts;
    for (int r = 0; r < shape.length(); ++r) starts.push_back(r);
    return ShiftedStandardTableau(random_filling(starts, shape.parts(), rng));
}

Word random_word(int alphabet, std::size_t length, std::mt19937_64& rng) {
    if (alphabet < 1) throw InvalidInput("alphabet must be nonempty");
    std::uniform_int_distribution<int> letter(1, alphabet);
    std::vector<int> letters(length);
    for (auto& a : letters) a = letter(rng);
    return Word(std::move(letters), alphabet);
}

Word square_word_of(const StandardTableau& t) {
    if (!t.is_square()) throw InvalidInput("square_word_of needs a square tableau");
    const int n = t.num_rows();
    std::vector<int> letters(static_cast<std::size_t>(t.size()));
    for (int r = 1; r <= n; ++r) {
        for (int v : t.rows()[r - 1]) letters[v - 1] = n + 1 - r;
    }
    return Word(std::move(letters), n);
}

}  // namespace sieve
