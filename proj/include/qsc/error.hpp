#pragma once

/**
 * @file error.hpp
 * @brief Exception types thrown by the library.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable tables.
struct table_mismatch : error {
    table_mismatch() : error("polynomials are defined over different variable tables") {}
};

/// Bad user input: unknown names, violated preconditions, malformed records.
struct invalid_input : error {
    using error::error;
};

struct parse_error : invalid_input {
    parse_error(const std::string& what, std::size_t pos)
        : invalid_input(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// The quotient is not of finite rank over the instanton/parameter ring.
struct degenerate_presentation : error {
    using error::error;
};

struct trace_degenerate : error {
    using error::error;
};

}  // namespace qsc
