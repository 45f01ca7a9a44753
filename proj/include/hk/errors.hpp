#pragma once

#include <stdexcept>
#include <string>

namespace hk {

// Arity chaining violated (composition mismatch, bad row sums, ...).
struct arity_error : std::runtime_error {
    explicit arity_error(const std::string& what) : std::runtime_error(what) {}
};

// Term/tangle grammar errors; `pos` is a byte offset into the input text.
struct parse_error : std::runtime_error {
    size_t pos;
    parse_error(const std::string& what, size_t pos_)
        : std::runtime_error(what + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hk
