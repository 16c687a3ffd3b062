#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational coefficients backed by GMP.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qsc/error.hpp"

namespace qsc {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `a` or `a/b` with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return invalid_input("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    std::size_t end_num = slash == std::string::npos ? s.size() : slash;
    if (!digits(i, end_num)) throw bad();
    if (slash != std::string::npos && !digits(slash + 1, s.size())) throw bad();
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational r(body, 10);
    if (r.get_den() == 0) throw invalid_input("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace qsc
