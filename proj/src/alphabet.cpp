#include "lyn/alphabet.hpp"

#include <algorithm>
#include <bitset>

#include "lyn/errors.hpp"

namespace lyn {

OrderedAlphabet OrderedAlphabet::from_letters(std::string_view letters_ascending) {
    OrderedAlphabet a;
    for (char c : letters_ascending) {
        const auto s = static_cast<Symbol>(c);
        if (a.ranks_[s] >= 0)
            throw invalid_alphabet_error(std::string("duplicate letter in ordering: '") + c + "'");
        a.ranks_[s] = static_cast<std::int16_t>(a.letters_.size());
        a.letters_.push_back(c);
    }
    return a;
}

OrderedAlphabet OrderedAlphabet::byte_order(std::string_view text) {
    std::bitset<256> seen;
    for (char c : text)
        seen.set(static_cast<Symbol>(c));
    std::string letters;
    for (unsigned v = 0; v < 256; ++v)
        if (seen.test(v))
            letters.push_back(static_cast<char>(v));
    return from_letters(letters);
}

std::strong_ordering OrderedAlphabet::compare(std::string_view a, std::string_view b) const {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        const int ra = rank(static_cast<Symbol>(a[i]));
        const int rb = rank(static_cast<Symbol>(b[i]));
        if (ra != rb)
            return ra <=> rb;
    }
    return a.size() <=> b.size();
}

void OrderedAlphabet::require_ranked(std::string_view word) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!ranks(static_cast<Symbol>(word[i])))
            throw invalid_alphabet_error(std::string("unranked symbol '") + word[i] +
                                         "' at position " + std::to_string(i + 1));
    }
}

} // namespace lyn
