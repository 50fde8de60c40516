#pragma once

#include <string>
#include <string_view>

namespace lyn {

// An immutable symbol sequence. Symbols are opaque bytes; the alphabet of a
// text is whatever distinct bytes it contains.
class Text {
public:
    Text() = default;
    explicit Text(std::string symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    std::string_view view() const noexcept { return symbols_; }
    operator std::string_view() const noexcept { return symbols_; }

    // Distinct letters in first-occurrence order.
    const std::string& letters() const noexcept { return letters_; }
    std::size_t distinct_count() const noexcept { return letters_.size(); }

    bool operator==(const Text& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::string letters_;
};

} // namespace lyn
