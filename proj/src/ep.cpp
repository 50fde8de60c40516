#include "lyn/ep.hpp"

#include <array>
#include <stdexcept>

namespace lyn {

EPVector compute_ep(std::string_view text) {
    EPVector ep;
    std::array<int, 256> index;
    index.fill(-1);
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<Symbol>(text[i]);
        std::size_t j = i + 1;
        while (j < text.size() && static_cast<Symbol>(text[j]) == c)
            ++j;
        if (index[c] < 0) {
            index[c] = static_cast<int>(ep.letters.size());
            ep.letters.push_back(text[i]);
            ep.runs.emplace_back();
        }
        ep.runs[static_cast<std::size_t>(index[c])].push_back(Run{i, j - i});
        i = j;
    }
    return ep;
}

Factorization factorize_exponents(const std::vector<std::uint64_t>& exponents) {
    for (std::uint64_t e : exponents)
        if (e < 1)
            throw std::invalid_argument("run-length exponents must be >= 1");
    return Factorization(detail::duval_ends(exponents, exponents.size(), InvertedIntegerOrder{}));
}

} // namespace lyn
