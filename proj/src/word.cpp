#include "sieve/word.hpp"

#include <algorithm>
#include <charconv>

#include "sieve/errors.hpp"

namespace sieve {

Word::Word(std::vector<int> letters, int alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ < 0) throw InvalidInput("alphabet bound must be nonnegative");
    for (int a : letters_) {
        if (a < 1 || a > alphabet_) {
            throw InvalidInput("letter " + std::to_string(a) + " outside 1.." + std::to_string(alphabet_));
        }
    }
}

Word Word::tail() const {
    if (letters_.empty()) throw InvalidInput("tail of the empty word");
    return Word(std::vector<int>(letters_.begin() + 1, letters_.end()), alphabet_);
}

Word Word::appended(int letter) const {
    auto letters = letters_;
    letters.push_back(letter);
    return Word(std::move(letters), alphabet_);
}

std::string to_string(const Word& w) {
    std::string out;
    const bool digits = w.alphabet() <= 9;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

Word parse_word(std::string_view text, int alphabet) {
    std::vector<int> letters;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto next = std::min(text.find(',', pos), text.size());
            const auto token = text.substr(pos, next - pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
                throw InvalidInput("malformed word \"" + std::string(text) + "\"");
            }
            letters.push_back(v);
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidInput("malformed word \"" + std::string(text) + "\"");
            letters.push_back(c - '0');
        }
    }
    if (alphabet == 0 && !letters.empty()) alphabet = *std::max_element(letters.begin(), letters.end());
    return Word(std::move(letters), alphabet);
}

}  // namespace sieve
