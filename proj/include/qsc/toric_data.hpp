#pragma once

/**
 * @file toric_data.hpp
 * @brief Cox-ring data of a toric variety: coordinates, divisor classes,
 *        primitive collections and the irrelevant ideal.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/monomial.hpp"
#include "qsc/rational.hpp"
#include "qsc/variable_table.hpp"

namespace qsc {

using DivisorClass = std::vector<int>;

struct ToricData {
    std::vector<std::string> coordinates;
    int picard_rank = 0;
    /// Row rho is the class of the divisor D_rho in the class-group basis.
    std::vector<DivisorClass> grading;
    std::vector<std::vector<std::size_t>> primitive_collections;
    /// Generators of the irrelevant ideal, as monomials over `table`.
    std::vector<Monomial> irrelevant_generators;
    /// Homogeneous coordinate ring: one generator-block variable per coordinate.
    TablePtr table;
    /// Factor dimensions when built as a product of projective spaces, else empty.
    std::vector<int> projective_factors;

    std::size_t size() const { return coordinates.size(); }

    DivisorClass class_of(const Monomial& m) const {
        DivisorClass c(static_cast<std::size_t>(picard_rank), 0);
        for (std::size_t rho = 0; rho < m.size(); ++rho)
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += static_cast<int>(m[rho]) * grading[rho][j];
        return c;
    }

    /// Names of the class-group generators used by Chern and Stanley-Reisner computations.
    std::vector<std::string> class_names() const {
        if (picard_rank == 1) return {"h"};
        std::vector<std::string> names;
        for (int j = 1; j <= picard_rank; ++j) names.push_back("h" + std::to_string(j));
        return names;
    }
};

inline int matrix_rank(const std::vector<DivisorClass>& rows, std::size_t ncols) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(a.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < a.size() && sgn(a[piv][col]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        auto& p = a[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / p[col];
            for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * p[c];
        }
        ++rank;
    }
    return rank;
}

inline ToricData make_toric_data(std::vector<std::string> coordinates, std::vector<DivisorClass> grading,
                                 std::vector<std::vector<std::size_t>> primitive_collections,
                                 std::vector<std::vector<std::size_t>> irrelevant) {
    if (coordinates.empty()) throw invalid_input("toric data needs at least one coordinate");
    if (grading.size() != coordinates.size()) throw invalid_input("grading matrix needs one row per coordinate");
    ToricData t;
    t.picard_rank = static_cast<int>(grading.front().size());
    if (t.picard_rank < 1) throw invalid_input("Picard rank must be positive");
    for (const auto& row : grading)
        if (static_cast<int>(row.size()) != t.picard_rank) throw invalid_input("ragged grading matrix");
    for (const auto& coll : primitive_collections)
        for (std::size_t i : coll)
            if (i >= coordinates.size()) throw invalid_input("primitive collection index out of range");
    std::vector<Variable> vars;
    for (const auto& name : coordinates) vars.push_back({name, 1, Block::generator});
    t.table = make_table(std::move(vars));
    for (const auto& gen : irrelevant) {
        Monomial m(coordinates.size());
        for (std::size_t i : gen) {
            if (i >= coordinates.size()) throw invalid_input("irrelevant generator index out of range");
            m = m * Monomial::variable(coordinates.size(), i);
        }
        t.irrelevant_generators.push_back(std::move(m));
    }
    t.coordinates = std::move(coordinates);
    t.grading = std::move(grading);
    t.primitive_collections = std::move(primitive_collections);
    return t;
}

/// Cox data of P^{n_1} x ... x P^{n_r}; coordinates x0, x1, ... grouped by factor.
inline ToricData product_projective_toric(const std::vector<int>& dims) {
    if (dims.empty()) throw invalid_input("product of projective spaces needs at least one factor");
    std::vector<std::string> coords;
    std::vector<DivisorClass> grading;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (dims[f] < 1) throw invalid_input("projective space dimensions must be positive");
        groups.emplace_back();
        for (int k = 0; k <= dims[f]; ++k) {
            groups.back().push_back(coords.size());
            coords.push_back("x" + std::to_string(coords.size()));
            DivisorClass c(dims.size(), 0);
            c[f] = 1;
            grading.push_back(std::move(c));
        }
    }
    // One coordinate from each factor.
    std::vector<std::vector<std::size_t>> irrelevant{{}};
    for (const auto& g : groups) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& partial : irrelevant)
            for (std::size_t i : g) {
                auto e = partial;
                e.push_back(i);
                next.push_back(std::move(e));
            }
        irrelevant = std::move(next);
    }
    ToricData t = make_toric_data(std::move(coords), std::move(grading), groups, irrelevant);
    t.projective_factors = dims;
    return t;
}

}  // namespace qsc
