#pragma once

/**
 * @file toric_bundle.hpp
 * @brief Deformations of the Euler sequence of a toric variety, Chern-class
 *        checks of the omalous conditions, and regularity of the cokernel.
 *
 * A DeformationMatrix has one row per coordinate x_rho and one column per
 * Picard generator; the entry in row rho must be a section of O(D_rho).
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsc/cohomology_rings.hpp"
#include "qsc/determinant.hpp"
#include "qsc/error.hpp"
#include "qsc/groebner.hpp"
#include "qsc/parser.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/render.hpp"
#include "qsc/toric_data.hpp"

namespace qsc {

struct DeformationMatrix {
    ToricData toric;
    PolyMatrix entries;
};

/// Builds a matrix from entry strings parsed over the coordinate ring.
inline DeformationMatrix deformation_from_text(const ToricData& toric,
                                               const std::vector<std::vector<std::string>>& rows) {
    DeformationMatrix m{toric, {}};
    for (const auto& row : rows) {
        m.entries.emplace_back();
        for (const auto& cell : row) m.entries.back().push_back(parse_poly(cell, toric.table));
    }
    return m;
}

/// Block-diagonal Euler map: the column of factor i holds that factor's coordinates.
inline DeformationMatrix euler_matrix_default(const ToricData& toric) {
    if (toric.projective_factors.empty())
        throw invalid_input("default Euler matrix requires a product of projective spaces");
    DeformationMatrix m{toric, {}};
    const auto r = static_cast<std::size_t>(toric.picard_rank);
    for (std::size_t rho = 0; rho < toric.size(); ++rho) {
        std::vector<Polynomial> row(r, Polynomial(toric.table));
        for (std::size_t j = 0; j < r; ++j)
            if (toric.grading[rho][j] == 1) row[j] = Polynomial::variable(toric.table, toric.coordinates[rho]);
        m.entries.push_back(std::move(row));
    }
    return m;
}

/**
 * Deformed Euler map of P^1 x P^1 with rows
 * (x0, e1 x0 + e2 x1), (x1, e3 x0), (g1 x2 + g2 x3, x2), (g3 x2, x3).
 */
inline DeformationMatrix p1p1_deformation(const ParameterTriple& eps, const ParameterTriple& gam) {
    ToricData toric = product_projective_toric({1, 1});
    const TablePtr& t = toric.table;
    auto x = [&](int i) { return Polynomial::variable(t, "x" + std::to_string(i)); };
    PolyMatrix e{{x(0), eps[0] * x(0) + eps[1] * x(1)},
                 {x(1), eps[2] * x(0)},
                 {gam[0] * x(2) + gam[1] * x(3), x(2)},
                 {gam[2] * x(2), x(3)}};
    return DeformationMatrix{std::move(toric), std::move(e)};
}

struct Violation {
    std::size_t row;
    std::size_t column;
    std::string reason;
};

/// Empty when the shape is #coordinates x picard rank and every entry in row rho has class D_rho.
inline std::vector<Violation> validate_deformation(const DeformationMatrix& m) {
    std::vector<Violation> out;
    const ToricData& t = m.toric;
    const auto r = static_cast<std::size_t>(t.picard_rank);
    if (m.entries.size() != t.size())
        out.push_back({m.entries.size(), 0,
                       "matrix has " + std::to_string(m.entries.size()) + " rows, expected " + std::to_string(t.size())});
    for (std::size_t rho = 0; rho < m.entries.size(); ++rho) {
        const auto& row = m.entries[rho];
        if (row.size() != r) {
            out.push_back({rho, row.size(),
                           "row has " + std::to_string(row.size()) + " columns, expected " + std::to_string(r)});
            continue;
        }
        if (rho >= t.size()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (!same_table(row[j].table(), t.table)) {
                out.push_back({rho, j, "entry is not over the coordinate ring"});
                continue;
            }
            for (const Term& term : row[j].terms())
                if (t.class_of(term.mono) != t.grading[rho]) {
                    out.push_back({rho, j, "term " + render(term.mono, *t.table) + " is not of class D_" +
                                               std::to_string(rho)});
                    break;
                }
        }
    }
    return out;
}

struct ChernData {
    Polynomial c1;
    Polynomial c2;
};

/// Total Chern class of the cokernel of O^r -> (+) O(b): product of (1 + b), reduced in the Stanley-Reisner ring.
inline ChernData chern_of_twists(const ToricData& toric, const std::vector<DivisorClass>& twists) {
    RingPresentation sr = stanley_reisner_ring(toric);
    const TablePtr& t = sr.table;
    const auto r = static_cast<std::size_t>(toric.picard_rank);
    Polynomial total = Polynomial::constant(t, 1);
    for (const DivisorClass& b : twists) {
        if (b.size() != r) throw invalid_input("twist class has the wrong number of entries");
        std::vector<Term> terms{{Monomial(r), 1}};
        for (std::size_t j = 0; j < r; ++j)
            if (b[j] != 0) terms.push_back({Monomial::variable(r, j), b[j]});
        total = total * Polynomial::from_terms(t, std::move(terms));
    }
    if (!sr.relations.empty()) total = normal_form(total, buchberger({t, sr.relations, MonomialOrder::degrevlex()}));
    std::vector<Term> d1, d2;
    for (const Term& term : total.terms()) {
        if (term.mono.total_degree() == 1) d1.push_back(term);
        if (term.mono.total_degree() == 2) d2.push_back(term);
    }
    return {Polynomial::from_terms(t, std::move(d1)), Polynomial::from_terms(t, std::move(d2))};
}

/// Chern data of the Euler-sequence cokernel with twists D_rho, i.e. of the tangent bundle.
inline ChernData chern_of_twisted_sum(const ToricData& toric) { return chern_of_twists(toric, toric.grading); }

struct OmalousReport {
    ChernData bundle;
    ChernData tangent;
    bool c2_matches = false;   // c2(E) = c2(T_X)
    bool det_matches = false;  // c1(E) = c1(T_X), the anticanonical class

    bool omalous() const { return c2_matches && det_matches; }
};

inline OmalousReport check_omalous_twists(const ToricData& toric, const std::vector<DivisorClass>& twists) {
    OmalousReport rep{chern_of_twists(toric, twists), chern_of_twisted_sum(toric)};
    rep.c2_matches = rep.bundle.c2 == rep.tangent.c2;
    rep.det_matches = rep.bundle.c1 == rep.tangent.c1;
    return rep;
}

/// The cokernel of a valid deformation has the tangent bundle's twist list.
inline OmalousReport check_omalous(const ToricData& toric, const DeformationMatrix& m) {
    auto v = validate_deformation(m);
    if (!v.empty())
        throw invalid_input("deformation matrix fails validation at row " + std::to_string(v[0].row) + ", column " +
                            std::to_string(v[0].column) + ": " + v[0].reason);
    return check_omalous_twists(toric, m.toric.grading);
}

/// All maximal (picard rank) minors, zero ones dropped, rows taken in lexicographic order.
inline IdealPresentation minors_ideal(const DeformationMatrix& m) {
    const ToricData& t = m.toric;
    const auto r = static_cast<std::size_t>(t.picard_rank);
    const std::size_t n = m.entries.size();
    if (n < r) throw invalid_input("fewer rows than the Picard rank");
    IdealPresentation ideal{t.table, {}, MonomialOrder::degrevlex()};
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        PolyMatrix sub;
        for (std::size_t i : pick) sub.push_back(m.entries[i]);
        Polynomial d = determinant(sub, t.table);
        if (!d.is_zero()) ideal.generators.push_back(std::move(d));
        std::size_t k = r;
        while (k > 0 && pick[k - 1] == n - r + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t i = k; i < r; ++i) pick[i] = pick[i - 1] + 1;
    }
    return ideal;
}

/// Irrelevant-ideal generators whose radical membership in the minors ideal fails.
inline std::vector<Monomial> regularity_failures(const ToricData& toric, const DeformationMatrix& m) {
    auto v = validate_deformation(m);
    if (!v.empty()) throw invalid_input("deformation matrix fails validation: " + v[0].reason);
    IdealPresentation minors = minors_ideal(m);
    std::vector<Monomial> bad;
    for (const Monomial& g : toric.irrelevant_generators)
        if (!radical_member(Polynomial::monomial(toric.table, g), minors)) bad.push_back(g);
    return bad;
}

/// The degeneracy locus of the map lies inside the excluded set, so the cokernel is a bundle.
inline bool check_bundle_regularity(const ToricData& toric, const DeformationMatrix& m) {
    return regularity_failures(toric, m).empty();
}

}  // namespace qsc
