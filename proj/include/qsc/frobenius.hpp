#pragma once

/**
 * @file frobenius.hpp
 * @brief Trace, pairing, quantum product and three-point correlators on a
 *        quotient algebra.
 *
 * The trace reads off the coefficient of the unique top-degree staircase
 * monomial in a normal form and scales it so that the reference element has
 * the requested value. Instanton monomials ride along as coefficients, so
 * traces and correlators are polynomials in q.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsc/cohomology_rings.hpp"
#include "qsc/determinant.hpp"
#include "qsc/error.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/render.hpp"

namespace qsc {

struct TraceFunctional {
    Polynomial reference;
    Rational reference_value;
    /// Trace of each top-degree staircase monomial.
    std::vector<std::pair<Monomial, Rational>> top_coefficients;
};

struct FrobeniusAlgebra {
    QuotientAlgebra algebra;
    TraceFunctional trace;
    long top_degree = 0;

    const TablePtr& table() const { return algebra.table(); }
};

/// Value of a correlator: a polynomial supported on instanton variables.
struct CorrelatorResult {
    Polynomial value;
};

inline FrobeniusAlgebra make_frobenius(QuotientAlgebra qa, const Polynomial& reference, const Rational& value) {
    const VariableTable& t = *qa.table();
    if (!same_table(reference.table(), qa.table())) throw table_mismatch();
    auto [gf, gl] = t.block_range(Block::generator);
    for (const Term& term : reference.terms())
        if (!term.mono.supported_in(gf, gl))
            throw invalid_input("trace reference must involve generator variables only");
    if (is_zero(value)) throw invalid_input("trace reference value must be nonzero");

    long top = 0;
    for (std::size_t i = 0; i < qa.module_basis.size(); ++i) top = std::max(top, qa.degree_of(i));
    auto ref_deg = graded_degree(reference);
    if (!ref_deg || *ref_deg != top)
        throw invalid_input("trace reference " + render(reference) + " is not homogeneous of top degree " +
                            std::to_string(top));

    std::vector<Monomial> tops;
    for (std::size_t i = 0; i < qa.module_basis.size(); ++i)
        if (qa.degree_of(i) == top) tops.push_back(qa.module_basis[i]);
    if (tops.size() != 1)
        throw trace_degenerate("top-degree part of the classical quotient has dimension " +
                               std::to_string(tops.size()));

    Polynomial classical = drop_block(drop_block(qa.normal_form(reference), Block::instanton), Block::parameter);
    Rational c = classical.coefficient(tops[0]);
    if (is_zero(c)) throw trace_degenerate("trace reference " + render(reference) + " vanishes in the quotient at q=0");

    TraceFunctional tr{reference, value, {{tops[0], value / c}}};
    return FrobeniusAlgebra{std::move(qa), std::move(tr), top};
}

/// tr(x), as a polynomial in the non-generator variables.
inline Polynomial trace(const FrobeniusAlgebra& fa, const Polynomial& x) {
    const VariableTable& t = *fa.table();
    auto [gf, gl] = t.block_range(Block::generator);
    Polynomial nf = fa.algebra.normal_form(x);
    std::vector<Term> out;
    for (const Term& term : nf.terms()) {
        Monomial gen = term.mono.restricted(gf, gl);
        for (const auto& [m, k] : fa.trace.top_coefficients)
            if (gen == m) out.push_back({term.mono / gen, term.coeff * k});
    }
    return Polynomial::from_terms(fa.table(), std::move(out), MonomialOrder::degrevlex());
}

inline Polynomial quantum_product(const FrobeniusAlgebra& fa, const Polynomial& a, const Polynomial& b) {
    return fa.algebra.normal_form(a * b);
}

inline Polynomial pairing(const FrobeniusAlgebra& fa, const Polynomial& a, const Polynomial& b) {
    return trace(fa, a * b);
}

inline CorrelatorResult three_point(const FrobeniusAlgebra& fa, const Polynomial& a, const Polynomial& b,
                                    const Polynomial& c) {
    return {trace(fa, a * b * c)};
}

/// Coefficient of q^beta, beta indexed over the instanton block.
inline Rational instanton_coefficient(const CorrelatorResult& r, const std::vector<Exponent>& beta) {
    const VariableTable& t = *r.value.table();
    auto [f, l] = t.block_range(Block::instanton);
    if (beta.size() != l - f)
        throw invalid_input("instanton degree has " + std::to_string(beta.size()) + " entries, expected " +
                            std::to_string(l - f));
    std::vector<Exponent> e(t.size(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i) e[f + i] = beta[i];
    return r.value.coefficient(Monomial(std::move(e)));
}

struct GramMatrix {
    std::vector<Monomial> basis;
    PolyMatrix entries;
    Polynomial determinant;
    /// Determinant at q = 0.
    Rational constant_term;
    bool nondegenerate = false;
};

inline GramMatrix gram_matrix(const FrobeniusAlgebra& fa) {
    const auto& qa = fa.algebra;
    GramMatrix g;
    g.basis = qa.module_basis;
    const std::size_t n = g.basis.size();
    g.entries.assign(n, std::vector<Polynomial>(n, Polynomial(fa.table())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g.entries[i][j] = pairing(fa, qa.basis_element(i), qa.basis_element(j));
            g.entries[j][i] = g.entries[i][j];
        }
    g.determinant = determinant(g.entries, fa.table());
    g.constant_term = g.determinant.coefficient(Monomial(fa.table()->size()));
    g.nondegenerate = !is_zero(g.constant_term);
    return g;
}

struct FrobeniusReport {
    bool symmetric = true;
    bool invariant = true;  // (a, b*c) == (a*b, c)
    bool unit_law = true;
    bool grading = true;
    std::size_t triples_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return symmetric && invariant && unit_law && grading; }
};

inline FrobeniusReport frobenius_check(const FrobeniusAlgebra& fa) {
    const auto& qa = fa.algebra;
    const std::size_t n = qa.module_basis.size();
    FrobeniusReport rep;
    std::vector<Polynomial> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(qa.basis_element(i));
    auto name = [&](std::size_t i) { return render(qa.module_basis[i], *fa.table()); };
    const Polynomial one = Polynomial::constant(fa.table(), 1, qa.order());

    for (std::size_t i = 0; i < n; ++i) {
        if (qa.degree_of(i) != fa.top_degree && !trace(fa, e[i]).is_zero()) {
            rep.grading = false;
            rep.failures.push_back("trace does not vanish on " + name(i));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j > i && !(pairing(fa, e[i], e[j]) == pairing(fa, e[j], e[i]))) {
                rep.symmetric = false;
                rep.failures.push_back("pairing not symmetric on (" + name(i) + ", " + name(j) + ")");
            }
            Polynomial ij = quantum_product(fa, e[i], e[j]);
            if (!(trace(fa, quantum_product(fa, one, ij)) == trace(fa, ij))) {
                rep.unit_law = false;
                rep.failures.push_back("unit law fails on " + name(i) + "*" + name(j));
            }
            for (std::size_t k = 0; k < n; ++k) {
                ++rep.triples_checked;
                Polynomial lhs = pairing(fa, e[i], quantum_product(fa, e[j], e[k]));
                Polynomial rhs = pairing(fa, ij, e[k]);
                if (!(lhs == rhs)) {
                    rep.invariant = false;
                    rep.failures.push_back("(a, b*c) != (a*b, c) for (" + name(i) + ", " + name(j) + ", " +
                                           name(k) + ")");
                }
            }
        }
    }
    return rep;
}

/// Every product of two staircase monomials reduces onto the staircase with
/// coefficients involving instanton variables only.
inline bool closure_check(const FrobeniusAlgebra& fa) {
    const auto& qa = fa.algebra;
    const VariableTable& t = *fa.table();
    auto [gf, gl] = t.block_range(Block::generator);
    auto [pf, pl] = t.block_range(Block::parameter);
    for (std::size_t i = 0; i < qa.module_basis.size(); ++i)
        for (std::size_t j = i; j < qa.module_basis.size(); ++j) {
            Polynomial nf = qa.normal_form(qa.basis_element(i) * qa.basis_element(j));
            for (const Term& term : nf.terms()) {
                if (term.mono.degree_in(pf, pl) != 0) return false;
                Monomial gen = term.mono.restricted(gf, gl);
                if (std::find(qa.module_basis.begin(), qa.module_basis.end(), gen) == qa.module_basis.end())
                    return false;
            }
        }
    return true;
}

}  // namespace qsc
