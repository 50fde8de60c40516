#pragma once

#include <string_view>
#include <vector>

#include "lyn/alphabet.hpp"
#include "lyn/factorization.hpp"

namespace lyn {

// True iff `word` is primitive and strictly least in lexorder among its
// rotations (equivalently, strictly smaller than each proper suffix).
bool is_lyndon(std::string_view word, const OrderedAlphabet& order);

// True iff reverse(word) is Lyndon under the same order.
bool is_co_lyndon(std::string_view word, const OrderedAlphabet& order);

// The unique factorization into Lyndon words, non-increasing in lexorder.
// Linear time, constant auxiliary space beyond the output. Empty text gives
// an empty factorization.
Factorization duval_factorize(std::string_view text, const OrderedAlphabet& order);

// The unique max factorization into co-Lyndon words. Equals duval_factorize
// of the reversed text with the factor list and every factor reversed.
Factorization co_lyndon_factorize(std::string_view text, const OrderedAlphabet& order);

// lambda[i] = length of the longest Lyndon prefix of the suffix starting at i.
std::vector<std::size_t> lyndon_array(std::string_view text, const OrderedAlphabet& order);

// F[i] = number of factors in the Lyndon factorization of the suffix starting
// at i. Satisfies F[i] = 1 + F[i + lambda[i]] with F past the end taken as 0.
std::vector<std::size_t> lyndon_factorization_array(std::string_view text,
                                                    const OrderedAlphabet& order);

// True iff `word` is not u^k for any k > 1. Order-independent.
bool is_primitive(std::string_view word);

// Start index of the rotation least in lexorder. Requires a primitive word;
// otherwise the least rotation is not a unique position and an
// ambiguity_error is thrown.
std::size_t least_rotation_start(std::string_view word, const OrderedAlphabet& order);

} // namespace lyn
