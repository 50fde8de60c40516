#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lyn/errors.hpp"
#include "lyn/factorize.hpp"
#include "oracles.hpp"

using lyn::OrderedAlphabet;

namespace {

const OrderedAlphabet kAB = OrderedAlphabet::from_letters("ab");
const OrderedAlphabet kABC = OrderedAlphabet::from_letters("abc");
const OrderedAlphabet kABCD = OrderedAlphabet::from_letters("abcd");

std::vector<std::string> factor_strings(std::string_view text, const lyn::Factorization& fac) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < fac.count(); ++k)
        out.emplace_back(fac.factor(text, k));
    return out;
}

std::string random_text(std::mt19937& rng, std::size_t max_len, std::string_view letters,
                        std::size_t min_len = 1) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> letter_dist(0, letters.size() - 1);
    std::string s(len_dist(rng), '\0');
    for (char& c : s)
        c = letters[letter_dist(rng)];
    return s;
}

} // namespace

TEST_CASE("is_lyndon matches the definition on fixed words") {
    CHECK(lyn::is_lyndon("a", kAB));
    CHECK(lyn::is_lyndon("aab", kAB));
    CHECK_FALSE(lyn::is_lyndon("aba", kAB));
    // Single letters belong to every family.
    CHECK(lyn::is_lyndon("b", kAB));
    CHECK(lyn::is_co_lyndon("b", kAB));
    // Inverted two-symbol integer alphabet rendered as bytes: 3 < 2 < 1.
    const auto inverted = OrderedAlphabet::from_letters("321");
    CHECK(lyn::is_lyndon("2221", inverted));
}

TEST_CASE("is_co_lyndon mirrors is_lyndon") {
    CHECK(lyn::is_co_lyndon("ba", kAB));
    CHECK_FALSE(lyn::is_co_lyndon("ab", kAB));
    CHECK(lyn::is_co_lyndon("a", kAB));
}

TEST_CASE("membership predicates reject misuse") {
    CHECK_THROWS_AS((void)lyn::is_lyndon("", kAB), std::invalid_argument);
    CHECK_THROWS_AS((void)lyn::is_lyndon("abz", kAB), lyn::invalid_alphabet_error);
    CHECK_THROWS_AS((void)lyn::is_co_lyndon("", kAB), std::invalid_argument);
    CHECK_THROWS_AS((void)lyn::duval_factorize("abz", kAB), lyn::invalid_alphabet_error);
}

TEST_CASE("duval_factorize reproduces the worked example") {
    const std::string x = "abcabcdabcaba";
    const auto fac = lyn::duval_factorize(x, kABCD);
    CHECK(factor_strings(x, fac) == std::vector<std::string>{"abcabcd", "abc", "ab", "a"});

    const auto reordered = OrderedAlphabet::from_letters("bcad");
    const auto fac2 = lyn::duval_factorize(x, reordered);
    CHECK(factor_strings(x, fac2) == std::vector<std::string>{"a", "bcabcdabcaba"});
}

TEST_CASE("duval_factorize edge cases") {
    const auto fac = lyn::duval_factorize("bbb", kAB);
    CHECK(factor_strings("bbb", fac) == std::vector<std::string>{"b", "b", "b"});
    CHECK(lyn::duval_factorize("", kAB).count() == 0);
}

TEST_CASE("co_lyndon_factorize fixed examples") {
    CHECK(factor_strings("ab", lyn::co_lyndon_factorize("ab", kAB)) ==
          std::vector<std::string>{"a", "b"});
    CHECK(factor_strings("ba", lyn::co_lyndon_factorize("ba", kAB)) ==
          std::vector<std::string>{"ba"});
    const std::string x = "abcabcdabcaba";
    CHECK(factor_strings(x, lyn::co_lyndon_factorize(x, kABCD)) ==
          std::vector<std::string>{"a", "bcabcdabcaba"});
}

TEST_CASE("lyndon_array fixed examples") {
    CHECK(lyn::lyndon_array("abaababaab", kAB) ==
          std::vector<std::size_t>{2, 1, 5, 2, 1, 2, 1, 3, 2, 1});
    CHECK(lyn::lyndon_array("a", kAB) == std::vector<std::size_t>{1});
    CHECK(lyn::lyndon_array("ab", kAB) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("lyndon_factorization_array fixed examples") {
    CHECK(lyn::lyndon_factorization_array("abaababaab", kAB) ==
          std::vector<std::size_t>{3, 3, 2, 3, 3, 2, 2, 1, 1, 1});
    CHECK(lyn::lyndon_factorization_array("aaa", kAB) == std::vector<std::size_t>{3, 2, 1});
    CHECK(lyn::lyndon_factorization_array("ab", kAB) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("is_primitive") {
    CHECK_FALSE(lyn::is_primitive("abab"));
    CHECK(lyn::is_primitive("aab"));
    CHECK(lyn::is_primitive("a"));
    CHECK_THROWS_AS((void)lyn::is_primitive(""), std::invalid_argument);
}

TEST_CASE("least_rotation_start fixed examples") {
    CHECK(lyn::least_rotation_start("baa", kAB) == 1);
    CHECK(lyn::least_rotation_start("aab", kAB) == 0);
    CHECK(lyn::least_rotation_start("cba", kABC) == 2);
    CHECK_THROWS_AS((void)lyn::least_rotation_start("abab", kAB), lyn::ambiguity_error);
}

TEST_CASE("least_rotation_start agrees with the quadratic oracle exhaustively") {
    for (std::size_t len = 1; len <= 10; ++len) {
        oracle::each_string("ab", len, [&](const std::string& w) {
            if (!oracle::is_primitive(w))
                return;
            const std::size_t got = lyn::least_rotation_start(w, kAB);
            CHECK(got == oracle::least_rotation_start(w, kAB));
            CHECK(lyn::is_lyndon(oracle::rotation(w, got), kAB));
        });
    }
    for (std::size_t len = 1; len <= 6; ++len) {
        oracle::each_string("abc", len, [&](const std::string& w) {
            if (!oracle::is_primitive(w))
                return;
            CHECK(lyn::least_rotation_start(w, kABC) == oracle::least_rotation_start(w, kABC));
        });
    }
}

TEST_CASE("duval agrees with prefix-stripping oracle on exhaustive small strings") {
    for (std::size_t len = 1; len <= 9; ++len) {
        oracle::each_string("ab", len, [&](const std::string& w) {
            CHECK(factor_strings(w, lyn::duval_factorize(w, kAB)) == oracle::factorize(w, kAB));
        });
    }
    for (std::size_t len = 1; len <= 6; ++len) {
        oracle::each_string("abc", len, [&](const std::string& w) {
            CHECK(factor_strings(w, lyn::duval_factorize(w, kABC)) == oracle::factorize(w, kABC));
        });
    }
}

TEST_CASE("factorization invariants on random texts") {
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        const std::string text = random_text(rng, 80, round % 2 ? "ab" : "abcd");
        const auto& order = round % 2 ? kAB : kABCD;
        const auto fac = lyn::duval_factorize(text, order);

        // Factors concatenate to the input.
        std::string joined;
        for (const auto& f : factor_strings(text, fac))
            joined += f;
        CHECK(joined == text);

        // Every factor is Lyndon and adjacent factors never increase.
        const auto factors = factor_strings(text, fac);
        for (std::size_t k = 0; k < factors.size(); ++k) {
            CHECK(oracle::is_lyndon(factors[k], order));
            if (k > 0)
                CHECK_FALSE(order.less(factors[k - 1], factors[k]));
        }
    }
}

TEST_CASE("reversal duality of the co-Lyndon factorization") {
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::string text = random_text(rng, 60, "abc");
        const auto co = factor_strings(text, lyn::co_lyndon_factorize(text, kABC));
        const std::string rev(text.rbegin(), text.rend());
        const auto straight = factor_strings(rev, lyn::duval_factorize(rev, kABC));
        // Reversing the factor list and each factor must give the straight run.
        std::vector<std::string> mirrored;
        for (auto it = co.rbegin(); it != co.rend(); ++it)
            mirrored.emplace_back(it->rbegin(), it->rend());
        CHECK(mirrored == straight);
        for (const auto& f : co)
            CHECK(oracle::is_co_lyndon(f, kABC));
    }
}

TEST_CASE("no word of length >= 2 is both Lyndon and co-Lyndon") {
    for (std::size_t len = 2; len <= 8; ++len) {
        oracle::each_string("ab", len, [&](const std::string& w) {
            const bool both = lyn::is_lyndon(w, kAB) && lyn::is_co_lyndon(w, kAB);
            CHECK_FALSE(both);
        });
    }
    oracle::each_string("ab", 1, [&](const std::string& w) {
        CHECK(lyn::is_lyndon(w, kAB));
        CHECK(lyn::is_co_lyndon(w, kAB));
    });
}

TEST_CASE("array recurrence and head invariants on random texts") {
    std::mt19937 rng(13);
    for (int round = 0; round < 120; ++round) {
        const std::string text = random_text(rng, 200, "abcd");
        const auto lam = lyn::lyndon_array(text, kABCD);
        const auto counts = lyn::lyndon_factorization_array(text, kABCD);
        const std::size_t n = text.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t next = i + lam[i];
            CHECK(counts[i] == 1 + (next < n ? counts[next] : 0));
        }
        const auto fac = lyn::duval_factorize(text, kABCD);
        CHECK(counts[0] == fac.count());
        CHECK(lam[0] == fac.bounds(0).second);
    }
}

TEST_CASE("arrays agree with suffix-by-suffix brute force") {
    std::mt19937 rng(17);
    for (int round = 0; round < 60; ++round) {
        const std::string text = random_text(rng, 24, "abc");
        CHECK(lyn::lyndon_array(text, kABC) == oracle::lyndon_array(text, kABC));
        CHECK(lyn::lyndon_factorization_array(text, kABC) ==
              oracle::factor_count_array(text, kABC));
    }
}

TEST_CASE("bordered texts never factorize into a single factor") {
    std::mt19937 rng(19);
    for (int round = 0; round < 200; ++round) {
        std::string text = random_text(rng, 40, "abcd", 2);
        text.back() = text.front();
        CHECK(lyn::duval_factorize(text, kABCD).count() >= 2);
    }
}
