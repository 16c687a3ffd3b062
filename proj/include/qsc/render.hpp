#pragma once

/**
 * @file render.hpp
 * @brief Canonical text form of monomials and polynomials.
 *
 * Terms appear in descending degrevlex order over the full table whatever
 * order the polynomial is stored in. Coefficients print as `a` or `a/b`,
 * powers as `x^k`, and factors are joined with `*`. The output is accepted
 * by parse_poly.
 */

#include <ostream>
#include <string>

#include "qsc/polynomial.hpp"

namespace qsc {

inline std::string render(const Monomial& m, const VariableTable& table) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += table[i].name;
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Polynomial q = p.with_order(MonomialOrder::degrevlex());
    std::string out;
    bool first = true;
    for (const Term& t : q.terms()) {
        bool negative = sgn(t.coeff) < 0;
        Rational mag = abs(t.coeff);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.mono.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + '*';
            out += render(t.mono, *q.table());
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << render(p); }

}  // namespace qsc
