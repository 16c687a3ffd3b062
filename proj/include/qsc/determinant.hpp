#pragma once

/**
 * @file determinant.hpp
 * @brief Exact determinants of small polynomial matrices.
 *
 * Laplace expansion along rows, memoized over the set of used columns, so an
 * n x n determinant costs O(n 2^n) polynomial products and no division.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/polynomial.hpp"

namespace qsc {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Polynomial determinant(const PolyMatrix& m, const TablePtr& table,
                              const MonomialOrder& order = MonomialOrder::degrevlex()) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(table, 1, order);
    if (n > 20) throw invalid_input("matrix too large for exact determinant");
    for (const auto& row : m)
        if (row.size() != n) throw invalid_input("determinant of a non-square matrix");

    // minor[mask] = determinant of the last popcount(mask) rows restricted to columns in mask.
    std::vector<std::optional<Polynomial>> minor(std::size_t{1} << n);
    minor[0] = Polynomial::constant(table, 1, order);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int k = __builtin_popcount(mask);
        std::size_t row = n - static_cast<std::size_t>(k);
        Polynomial acc(table, order);
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            const Polynomial& e = m[row][col];
            if (!e.is_zero()) {
                Polynomial t = e * *minor[mask & ~(1u << col)];
                acc = sign > 0 ? acc + t : acc - t;
            }
            sign = -sign;
        }
        minor[mask] = std::move(acc);
    }
    return *minor[(1u << n) - 1];
}

}  // namespace qsc
