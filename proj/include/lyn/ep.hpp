#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lyn/alphabet.hpp"
#include "lyn/factorization.hpp"

namespace lyn {

// One maximal run of a single letter.
struct Run {
    std::size_t start = 0;
    std::uint64_t length = 0;
    bool operator==(const Run&) const = default;
};

using RunList = std::vector<Run>;

// Run-length exponent patterns per distinct letter, letters in
// first-occurrence order. Summing a letter's run lengths gives its plain
// occurrence count.
struct EPVector {
    std::string letters;
    std::vector<RunList> runs;

    std::size_t distinct_count() const noexcept { return letters.size(); }

    // -1 when the letter does not occur.
    int index_of(Symbol s) const noexcept {
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (static_cast<Symbol>(letters[i]) == s)
                return static_cast<int>(i);
        return -1;
    }

    std::vector<std::uint64_t> exponents(std::size_t letter_index) const {
        std::vector<std::uint64_t> e;
        e.reserve(runs[letter_index].size());
        for (const Run& r : runs[letter_index])
            e.push_back(r.length);
        return e;
    }

    std::uint64_t parikh_count(std::size_t letter_index) const {
        std::uint64_t sum = 0;
        for (const Run& r : runs[letter_index])
            sum += r.length;
        return sum;
    }
};

// The integer alphabet with larger values ranking lower: ... 3 < 2 < 1.
// Run-length exponents factorized under it stay ordered the way the letters'
// runs appear in a Lyndon word.
struct InvertedIntegerOrder {
    bool less(std::uint64_t a, std::uint64_t b) const noexcept { return a > b; }
    bool operator()(std::uint64_t a, std::uint64_t b) const noexcept { return a > b; }
};

// Single linear scan. Empty text gives an empty EPVector.
EPVector compute_ep(std::string_view text);

// Lyndon factorization of an exponent sequence over the inverted integer
// alphabet. Entries must be >= 1.
Factorization factorize_exponents(const std::vector<std::uint64_t>& exponents);

} // namespace lyn
