#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sieve {

// A finite word over the alphabet 1..alphabet().
class Word {
public:
    Word() = default;
    Word(std::vector<int> letters, int alphabet);

    const std::vector<int>& letters() const noexcept { return letters_; }
    int alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // 1-indexed letter access.
    int operator[](std::size_t i) const { return letters_.at(i - 1); }

    // The word without its first letter.
    Word tail() const;
    Word appended(int letter) const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int alphabet_ = 0;
};

// Digit string for alphabets up to 9 ("332132121"), comma-separated otherwise.
std::string to_string(const Word& w);

// Accepts either form. The alphabet defaults to the largest letter present.
Word parse_word(std::string_view text, int alphabet = 0);

}  // namespace sieve
