#pragma once

#include <stdexcept>
#include <string>

namespace lyn {

// A word or text contains a symbol the alphabet does not rank.
class invalid_alphabet_error : public std::invalid_argument {
public:
    explicit invalid_alphabet_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// The requested position is not unique (least rotation of a non-primitive word).
class ambiguity_error : public std::invalid_argument {
public:
    explicit ambiguity_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// A precedence graph admits no total order (cycle).
class inconsistency_error : public std::runtime_error {
public:
    explicit inconsistency_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A verified law failed. Distinct from misuse: this signals a library defect.
class property_violation_error : public std::logic_error {
public:
    explicit property_violation_error(const std::string& what)
        : std::logic_error(what) {}
};

// Exhaustive search over more permutations than the configured limit allows.
class factorial_blowup_error : public std::length_error {
public:
    explicit factorial_blowup_error(const std::string& what)
        : std::length_error(what) {}
};

class empty_input_error : public std::invalid_argument {
public:
    explicit empty_input_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Unknown symbol rejected during ingestion; position is 1-based.
class rejected_symbol_error : public std::invalid_argument {
public:
    rejected_symbol_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace lyn
