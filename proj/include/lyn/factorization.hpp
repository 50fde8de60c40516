#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace lyn {

// Factor boundaries over a sequence of length n. Factors are contiguous,
// non-overlapping, nonempty, and tile [0, n). Stored as the end position of
// each factor, strictly increasing; the last end equals n.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<std::size_t> ends) : ends_(std::move(ends)) {}

    std::size_t count() const noexcept { return ends_.size(); }
    const std::vector<std::size_t>& ends() const noexcept { return ends_; }

    // Half-open [begin, end) bounds of factor k.
    std::pair<std::size_t, std::size_t> bounds(std::size_t k) const {
        return {k == 0 ? 0 : ends_[k - 1], ends_[k]};
    }

    std::string_view factor(std::string_view seq, std::size_t k) const {
        const auto [b, e] = bounds(k);
        return seq.substr(b, e - b);
    }

    std::vector<std::string_view> factors(std::string_view seq) const {
        std::vector<std::string_view> out;
        out.reserve(ends_.size());
        for (std::size_t k = 0; k < ends_.size(); ++k)
            out.push_back(factor(seq, k));
        return out;
    }

    bool operator==(const Factorization& other) const { return ends_ == other.ends_; }

private:
    std::vector<std::size_t> ends_;
};

namespace detail {

// Duval's factorization over any random-access sequence and strict order.
// Emits factor end positions; each factor is least among its rotations under
// `less` and the factor list is non-increasing.
template <typename Seq, typename Less>
std::vector<std::size_t> duval_ends(const Seq& s, std::size_t n, Less less) {
    std::vector<std::size_t> ends;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && !less(s[j], s[k])) { // s[k] <= s[j]
            if (less(s[k], s[j]))
                k = i;
            else
                ++k;
            ++j;
        }
        const std::size_t len = j - k;
        while (i <= k) {
            i += len;
            ends.push_back(i);
        }
    }
    return ends;
}

// One round of Duval's scan from `start`: the first factor of the suffix
// factorization, possibly repeated. Returns (factor length, repeat count).
template <typename Seq, typename Less>
std::pair<std::size_t, std::size_t> duval_first_run(const Seq& s, std::size_t n,
                                                    std::size_t start, Less less) {
    std::size_t j = start + 1, k = start;
    while (j < n && !less(s[j], s[k])) {
        if (less(s[k], s[j]))
            k = start;
        else
            ++k;
        ++j;
    }
    const std::size_t len = j - k;
    return {len, (k - start) / len + 1};
}

} // namespace detail
} // namespace lyn
