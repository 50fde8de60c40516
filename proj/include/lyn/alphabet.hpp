#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lyn {

using Symbol = unsigned char;

// A bijective ranking of a set of symbols. Rank 0 is the least symbol;
// comparing two words rank by rank implements lexorder under this alphabet.
class OrderedAlphabet {
public:
    OrderedAlphabet() { ranks_.fill(-1); }

    // Letters listed least first, e.g. "bcad" means b < c < a < d.
    static OrderedAlphabet from_letters(std::string_view letters_ascending);

    // The distinct letters of `text`, ranked in ascending byte order.
    static OrderedAlphabet byte_order(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // -1 when the symbol is unranked.
    int rank(Symbol s) const noexcept { return ranks_[s]; }
    bool ranks(Symbol s) const noexcept { return ranks_[s] >= 0; }

    // Letters in ascending rank order; doubles as the permutation string
    // used in reports.
    const std::string& letters() const noexcept { return letters_; }

    bool less(Symbol a, Symbol b) const noexcept { return ranks_[a] < ranks_[b]; }

    // Lexorder on words: proper prefixes come first, otherwise the first
    // differing position decides by rank.
    std::strong_ordering compare(std::string_view a, std::string_view b) const;
    bool less(std::string_view a, std::string_view b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    // Throws invalid_alphabet_error naming the first unranked symbol.
    void require_ranked(std::string_view word) const;

    bool operator==(const OrderedAlphabet& other) const { return letters_ == other.letters_; }

private:
    std::array<std::int16_t, 256> ranks_;
    std::string letters_;
};

} // namespace lyn
