#include "lyn/text.hpp"

#include <bitset>

namespace lyn {

Text::Text(std::string symbols) : symbols_(std::move(symbols)) {
    std::bitset<256> seen;
    for (char c : symbols_) {
        const auto v = static_cast<unsigned char>(c);
        if (!seen.test(v)) {
            seen.set(v);
            letters_.push_back(c);
        }
    }
}

} // namespace lyn
