#pragma once

#include <stdexcept>
#include <string>

namespace paley {

// Bad arguments from the caller (non-prime p, q not 1 mod 4, ...).
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of zero in a field, or of a non-unit in a Galois ring.
struct non_invertible : std::runtime_error {
    explicit non_invertible(const std::string& msg) : std::runtime_error(msg) {}
};

// Carry sequence requested for an index where it is absent or not unique
// (a = 0, k, or q-1).
struct degenerate_carry : std::runtime_error {
    explicit degenerate_carry(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal assumption, e.g. a valuation that should be measurable
// at the working precision but is not.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// CLI size guard tripped without an override.
struct guard_exceeded : std::runtime_error {
    explicit guard_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// File read/write failure in the CLI.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace paley
