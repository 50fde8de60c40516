#include "lyn/factorize.hpp"

#include <algorithm>
#include <stdexcept>

#include "lyn/errors.hpp"

namespace lyn {
namespace {

struct RankLess {
    const OrderedAlphabet* order;
    bool operator()(char a, char b) const {
        return order->less(static_cast<Symbol>(a), static_cast<Symbol>(b));
    }
};

void require_word(std::string_view word, const OrderedAlphabet& order) {
    if (word.empty())
        throw std::invalid_argument("empty word");
    order.require_ranked(word);
}

} // namespace

bool is_lyndon(std::string_view word, const OrderedAlphabet& order) {
    require_word(word, order);
    // A word is Lyndon exactly when its Duval factorization is the word itself.
    const auto ends = detail::duval_ends(word, word.size(), RankLess{&order});
    return ends.size() == 1;
}

bool is_co_lyndon(std::string_view word, const OrderedAlphabet& order) {
    require_word(word, order);
    std::string reversed(word.rbegin(), word.rend());
    const auto ends = detail::duval_ends(reversed, reversed.size(), RankLess{&order});
    return ends.size() == 1;
}

Factorization duval_factorize(std::string_view text, const OrderedAlphabet& order) {
    order.require_ranked(text);
    return Factorization(detail::duval_ends(text, text.size(), RankLess{&order}));
}

Factorization co_lyndon_factorize(std::string_view text, const OrderedAlphabet& order) {
    order.require_ranked(text);
    const std::size_t n = text.size();
    std::string reversed(text.rbegin(), text.rend());
    const auto rev_ends = detail::duval_ends(reversed, n, RankLess{&order});
    // A factor [b, e) of the reversed text mirrors to [n-e, n-b); mirrored
    // spans arrive in reverse order and tile [0, n), so the end positions in
    // text order are n minus each reversed-factor begin, taken last first.
    std::vector<std::size_t> ends;
    ends.reserve(rev_ends.size());
    for (std::size_t k = rev_ends.size(); k-- > 0;)
        ends.push_back(n - (k == 0 ? 0 : rev_ends[k - 1]));
    return Factorization(std::move(ends));
}

std::vector<std::size_t> lyndon_array(std::string_view text, const OrderedAlphabet& order) {
    order.require_ranked(text);
    const std::size_t n = text.size();
    std::vector<std::size_t> lam(n, 0);
    const RankLess less{&order};
    // One Duval round from each still-unknown position. The round from i
    // yields the first factor of the suffix at i repeated m times; the
    // factorization of a suffix cut at a factor boundary is the remaining
    // factor list, so every repeat start shares the same prefix length.
    for (std::size_t i = 0; i < n; ++i) {
        if (lam[i] != 0)
            continue;
        const auto [len, reps] = detail::duval_first_run(text, n, i, less);
        for (std::size_t t = 0; t < reps; ++t)
            lam[i + t * len] = len;
    }
    return lam;
}

std::vector<std::size_t> lyndon_factorization_array(std::string_view text,
                                                    const OrderedAlphabet& order) {
    order.require_ranked(text);
    const std::size_t n = text.size();
    std::vector<std::size_t> counts(n + 1, 0);
    const RankLess less{&order};
    // Right to left: the first factor of each suffix is recomputed here
    // rather than shared with lyndon_array, so the two stay independent.
    for (std::size_t i = n; i-- > 0;) {
        const auto [len, reps] = detail::duval_first_run(text, n, i, less);
        (void)reps;
        counts[i] = 1 + counts[i + len];
    }
    counts.pop_back();
    return counts;
}

bool is_primitive(std::string_view word) {
    if (word.empty())
        throw std::invalid_argument("empty word");
    const std::size_t n = word.size();
    // Longest proper border via the KMP failure function; word is a
    // repetition iff the smallest period divides n with quotient > 1.
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && word[i] != word[b])
            b = border[b - 1];
        if (word[i] == word[b])
            ++b;
        border[i] = b;
    }
    const std::size_t period = n - border[n - 1];
    return period == n || n % period != 0;
}

std::size_t least_rotation_start(std::string_view word, const OrderedAlphabet& order) {
    require_word(word, order);
    if (!is_primitive(word))
        throw ambiguity_error("least rotation of a non-primitive word is not a unique position");
    // Booth's algorithm over the conceptually doubled word.
    const std::size_t n = word.size();
    const auto at = [&](std::size_t i) { return static_cast<Symbol>(word[i % n]); };
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Symbol sj = at(j);
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (order.less(sj, at(k + static_cast<std::size_t>(i) + 1)))
                k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (order.less(sj, at(k)))
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

} // namespace lyn
