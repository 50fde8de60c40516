#include "lyn/umff.hpp"

#include <set>
#include <stdexcept>

#include "lyn/errors.hpp"
#include "lyn/factorize.hpp"

namespace lyn {

bool WordFamily::contains(std::string_view word) const {
    return tag == FamilyTag::lyndon ? is_lyndon(word, order) : is_co_lyndon(word, order);
}

std::vector<std::string> enumerate_family(const WordFamily& family, std::size_t max_len) {
    if (max_len < 1)
        throw std::invalid_argument("max_len must be >= 1");
    if (family.order.empty())
        throw std::invalid_argument("alphabet must have at least one letter");
    const std::string& letters = family.order.letters();
    std::vector<std::string> members;
    std::string word;
    // Odometer over ranks; within a length, words appear in lexorder.
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        for (;;) {
            word.clear();
            for (std::size_t d : digits)
                word.push_back(letters[d]);
            if (family.contains(word))
                members.push_back(word);
            std::size_t pos = len;
            while (pos > 0 && digits[pos - 1] + 1 == letters.size())
                digits[--pos] = 0;
            if (pos == 0)
                break;
            ++digits[pos - 1];
        }
    }
    return members;
}

bool check_lyndon_concat(std::string_view u, std::string_view v, const OrderedAlphabet& order) {
    if (!is_lyndon(u, order) || !is_lyndon(v, order))
        throw std::invalid_argument("both inputs must be Lyndon words");
    const std::string uv = std::string(u) + std::string(v);
    const bool concat_member = is_lyndon(uv, order);
    const bool u_before_v = order.less(u, v);
    if (concat_member != u_before_v)
        throw property_violation_error("Lyndon concatenation law failed for '" + uv + "'");
    return concat_member;
}

bool check_co_lyndon_concat(std::string_view u, std::string_view v, const OrderedAlphabet& order) {
    if (!is_co_lyndon(u, order) || !is_co_lyndon(v, order))
        throw std::invalid_argument("both inputs must be co-Lyndon words");
    const std::string uv = std::string(u) + std::string(v);
    const bool concat_member = is_co_lyndon(uv, order);
    const std::string ru(u.rbegin(), u.rend());
    const std::string rv(v.rbegin(), v.rend());
    const bool v_before_u = order.less(rv, ru);
    if (concat_member != v_before_u)
        throw property_violation_error("co-Lyndon concatenation law failed for '" + uv + "'");
    return concat_member;
}

bool check_intersection(const OrderedAlphabet& alphabet, std::size_t max_len) {
    const auto lyndon = enumerate_family({FamilyTag::lyndon, alphabet}, max_len);
    const auto co = enumerate_family({FamilyTag::co_lyndon, alphabet}, max_len);
    const std::set<std::string> co_set(co.begin(), co.end());
    std::size_t common = 0;
    for (const std::string& w : lyndon) {
        if (co_set.count(w) == 0)
            continue;
        if (w.size() != 1)
            return false;
        ++common;
    }
    return common == alphabet.size();
}

bool verify_max_factorization(const std::vector<std::string>& factors, const WordFamily& family) {
    std::string whole;
    for (const std::string& f : factors) {
        if (!family.contains(f))
            throw std::invalid_argument("factor '" + f + "' is not in the family");
        whole += f;
    }
    const Factorization expect = family.tag == FamilyTag::lyndon
                                     ? duval_factorize(whole, family.order)
                                     : co_lyndon_factorize(whole, family.order);
    if (expect.count() != factors.size())
        return false;
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (expect.factor(whole, k) != factors[k])
            return false;
    return true;
}

} // namespace lyn
