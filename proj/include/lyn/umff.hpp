#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lyn/alphabet.hpp"

namespace lyn {

enum class FamilyTag { lyndon, co_lyndon };

// A word family with the order that defines membership.
struct WordFamily {
    FamilyTag tag = FamilyTag::lyndon;
    OrderedAlphabet order;

    bool contains(std::string_view word) const;
};

// All family members of length <= max_len over the family's letters, sorted
// by (length, lexorder). Exactly one rotation of every primitive word of each
// length appears.
std::vector<std::string> enumerate_family(const WordFamily& family, std::size_t max_len);

// Concatenation law for Lyndon words: uv is Lyndon iff u comes before v in
// lexorder. Returns whether uv is Lyndon; a mismatch between the two sides of
// the biconditional raises property_violation_error.
bool check_lyndon_concat(std::string_view u, std::string_view v, const OrderedAlphabet& order);

// Concatenation law for co-Lyndon words: uv is co-Lyndon iff v comes before u
// in co-lexorder (reversed strings compared in lexorder).
bool check_co_lyndon_concat(std::string_view u, std::string_view v, const OrderedAlphabet& order);

// True iff, up to max_len, the Lyndon and co-Lyndon families intersect in
// exactly the single letters.
bool check_intersection(const OrderedAlphabet& alphabet, std::size_t max_len);

// True iff the concatenation of `factors` has `factors` as its unique max
// factorization over the family; equivalently the list is non-increasing in
// the family's order.
bool verify_max_factorization(const std::vector<std::string>& factors, const WordFamily& family);

} // namespace lyn
