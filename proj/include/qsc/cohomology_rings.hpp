#pragma once

/**
 * @file cohomology_rings.hpp
 * @brief Presentations of (quantum) cohomology and quantum sheaf cohomology
 *        rings, and their realization as quotient algebras.
 *
 * A QuotientAlgebra is computed under the block order that ranks generator
 * monomials before any instanton or parameter variable. Its staircase in the
 * generator block is a basis of the quotient as a module over the q ring.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/groebner.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/render.hpp"
#include "qsc/toric_data.hpp"

namespace qsc {

struct RingPresentation {
    TablePtr table;
    std::vector<Polynomial> relations;
    std::string description;
};

/// Checks nonzero, homogeneous relations over the given table.
inline RingPresentation make_presentation(TablePtr table, std::vector<Polynomial> relations,
                                          std::string description) {
    for (const Polynomial& r : relations) {
        if (!same_table(r.table(), table)) throw table_mismatch();
        if (r.is_zero()) throw invalid_input("zero relation in presentation '" + description + "'");
        if (!graded_degree(r)) throw invalid_input("relation " + render(r) + " is not homogeneous");
    }
    return RingPresentation{std::move(table), std::move(relations), std::move(description)};
}

using ParameterTriple = std::array<Rational, 3>;

namespace detail {

inline std::vector<std::string> indexed_names(const std::string& stem, std::size_t count) {
    if (count == 1) return {stem};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

inline std::string projective_name(const std::vector<int>& dims) {
    std::string s;
    for (int n : dims) s += (s.empty() ? "" : "x") + std::string("P^") + std::to_string(n);
    return s;
}

inline RingPresentation projective_products(const std::vector<int>& dims, bool quantum) {
    if (dims.empty()) throw invalid_input("need at least one projective factor");
    for (int n : dims)
        if (n < 1) throw invalid_input("projective space dimensions must be positive");
    auto hs = indexed_names("H", dims.size());
    auto qs = indexed_names("q", dims.size());
    std::vector<Variable> vars;
    for (const auto& h : hs) vars.push_back({h, 1, Block::generator});
    if (quantum)
        for (std::size_t i = 0; i < dims.size(); ++i) vars.push_back({qs[i], dims[i] + 1, Block::instanton});
    TablePtr table = make_table(std::move(vars));
    std::vector<Polynomial> rels;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        Polynomial r = Polynomial::variable(table, hs[i]).pow(static_cast<unsigned>(dims[i] + 1));
        if (quantum) r = r - Polynomial::variable(table, qs[i]);
        rels.push_back(std::move(r));
    }
    std::string what = (quantum ? "quantum cohomology of " : "cohomology of ") + projective_name(dims);
    return make_presentation(std::move(table), std::move(rels), std::move(what));
}

inline TablePtr p1p1_table(bool symbolic) {
    std::vector<Variable> vars{{"psi", 1, Block::generator},
                               {"psit", 1, Block::generator},
                               {"q1", 2, Block::instanton},
                               {"q2", 2, Block::instanton}};
    if (symbolic)
        for (const char* p : {"eps1", "eps2", "eps3", "gam1", "gam2", "gam3"})
            vars.push_back({p, 0, Block::parameter});
    return make_table(std::move(vars));
}

/// psi^2 + e1 psi psit - e2 e3 psit^2 - q1 and psit^2 + g1 psi psit - g2 g3 psi^2 - q2,
/// with each coefficient supplied as a polynomial.
inline std::vector<Polynomial> p1p1_relations(const TablePtr& t, const std::array<Polynomial, 3>& e,
                                              const std::array<Polynomial, 3>& g, bool with_q) {
    auto psi = Polynomial::variable(t, "psi");
    auto psit = Polynomial::variable(t, "psit");
    Polynomial r1 = psi * psi + e[0] * psi * psit - e[1] * e[2] * psit * psit;
    Polynomial r2 = psit * psit + g[0] * psi * psit - g[1] * g[2] * psi * psi;
    if (with_q) {
        r1 = r1 - Polynomial::variable(t, "q1");
        r2 = r2 - Polynomial::variable(t, "q2");
    }
    return {r1, r2};
}

inline std::string triple_text(const ParameterTriple& p) {
    return "(" + to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]) + ")";
}

}  // namespace detail

/// Q[H_1..H_r] / <H_i^{n_i+1}>.
inline RingPresentation classical_cohomology_products(const std::vector<int>& dims) {
    return detail::projective_products(dims, false);
}

/// Q[H_1..H_r, q_1..q_r] / <H_i^{n_i+1} - q_i> with deg q_i = n_i + 1.
inline RingPresentation quantum_cohomology_products(const std::vector<int>& dims) {
    return detail::projective_products(dims, true);
}

/// Quantum sheaf cohomology of the deformed tangent bundle of P^1 x P^1 at rational parameters.
inline RingPresentation qsc_presentation_p1p1(const ParameterTriple& eps, const ParameterTriple& gam) {
    TablePtr t = detail::p1p1_table(false);
    auto c = [&](const Rational& r) { return Polynomial::constant(t, r); };
    auto rels = detail::p1p1_relations(t, {c(eps[0]), c(eps[1]), c(eps[2])}, {c(gam[0]), c(gam[1]), c(gam[2])}, true);
    std::erase_if(rels, [](const Polynomial& p) { return p.is_zero(); });
    return make_presentation(t, std::move(rels),
                             "quantum sheaf cohomology of P^1xP^1, eps=" + detail::triple_text(eps) +
                                 " gam=" + detail::triple_text(gam));
}

/// Same family with eps1..eps3, gam1..gam3 kept as degree-0 parameter variables.
inline RingPresentation qsc_presentation_p1p1_symbolic() {
    TablePtr t = detail::p1p1_table(true);
    auto v = [&](const char* n) { return Polynomial::variable(t, n); };
    auto rels = detail::p1p1_relations(t, {v("eps1"), v("eps2"), v("eps3")}, {v("gam1"), v("gam2"), v("gam3")}, true);
    return make_presentation(t, std::move(rels), "quantum sheaf cohomology of P^1xP^1, symbolic parameters");
}

/// The q-free sheaf cohomology ring of the same family.
inline RingPresentation sheaf_cohomology_p1p1(const ParameterTriple& eps, const ParameterTriple& gam) {
    TablePtr t = make_table({{"psi", 1, Block::generator}, {"psit", 1, Block::generator}});
    auto c = [&](const Rational& r) { return Polynomial::constant(t, r); };
    auto rels = detail::p1p1_relations(t, {c(eps[0]), c(eps[1]), c(eps[2])}, {c(gam[0]), c(gam[1]), c(gam[2])}, false);
    std::erase_if(rels, [](const Polynomial& p) { return p.is_zero(); });
    return make_presentation(t, std::move(rels),
                             "sheaf cohomology of P^1xP^1, eps=" + detail::triple_text(eps) +
                                 " gam=" + detail::triple_text(gam));
}

struct QuotientAlgebra {
    RingPresentation presentation;
    GroebnerBasis gb;
    /// Staircase monomials in the generator block; sorted by degree, then descending.
    std::vector<Monomial> module_basis;

    const TablePtr& table() const { return presentation.table; }
    const MonomialOrder& order() const { return gb.order; }

    Polynomial normal_form(const Polynomial& p) const { return qsc::normal_form(p, gb); }

    Polynomial basis_element(std::size_t i) const {
        return Polynomial::monomial(table(), module_basis[i], 1, order());
    }

    long degree_of(std::size_t i) const { return module_basis[i].weighted_degree(*table()); }

    /// dims[d] = number of basis monomials of degree d.
    std::vector<std::size_t> graded_dimensions() const {
        std::vector<std::size_t> dims;
        for (std::size_t i = 0; i < module_basis.size(); ++i) {
            auto d = static_cast<std::size_t>(degree_of(i));
            if (dims.size() <= d) dims.resize(d + 1, 0);
            ++dims[d];
        }
        return dims;
    }
};

/// Generator-block staircase of a Gröbner basis; nullopt if it is infinite.
inline std::optional<std::vector<Monomial>> generator_staircase(const GroebnerBasis& gb) {
    const VariableTable& t = *gb.table;
    auto [gf, gl] = t.block_range(Block::generator);
    std::vector<Monomial> walls;
    for (const Polynomial& g : gb.elements)
        if (g.leading_monomial().supported_in(gf, gl)) walls.push_back(g.leading_monomial());

    std::vector<Exponent> bound(gl - gf, 0);
    for (std::size_t v = gf; v < gl; ++v) {
        for (const Monomial& w : walls)
            if (w[v] > 0 && w.total_degree() == w[v] && (bound[v - gf] == 0 || w[v] < bound[v - gf]))
                bound[v - gf] = w[v];
        if (bound[v - gf] == 0) return std::nullopt;
    }

    std::vector<Monomial> stairs;
    std::vector<Exponent> e(t.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (v == gl) {
            Monomial m(e);
            for (const Monomial& w : walls)
                if (divides(w, m)) return;
            stairs.push_back(std::move(m));
            return;
        }
        for (Exponent k = 0; k < bound[v - gf]; ++k) {
            e[v] = k;
            walk(v + 1);
        }
        e[v] = 0;
    };
    walk(gf);

    const MonomialOrder& o = gb.order;
    std::sort(stairs.begin(), stairs.end(), [&](const Monomial& a, const Monomial& b) {
        long da = a.weighted_degree(t), db = b.weighted_degree(t);
        if (da != db) return da < db;
        return o.greater(a, b);
    });
    return stairs;
}

inline QuotientAlgebra quotient_algebra(const RingPresentation& pres) {
    if (pres.relations.empty())
        throw degenerate_presentation("presentation '" + pres.description + "' has no relations");
    MonomialOrder order = MonomialOrder::block(*pres.table);
    GroebnerBasis gb = buchberger(IdealPresentation{pres.table, pres.relations, order});
    auto stairs = generator_staircase(gb);
    if (!stairs)
        throw degenerate_presentation("degenerate presentation: infinite staircase for '" + pres.description + "'");
    return QuotientAlgebra{pres, std::move(gb), std::move(*stairs)};
}

/// Replaces instanton or parameter variables by rational values and removes them from the table.
inline RingPresentation substitute(const RingPresentation& pres, const std::map<std::string, Rational>& assignments) {
    const VariableTable& t = *pres.table;
    std::vector<std::optional<std::size_t>> index(t.size());
    std::vector<Rational> values(t.size());
    std::vector<Variable> kept;
    for (const auto& [name, value] : assignments) {
        auto i = t.index_of(name);
        if (!i) throw invalid_input("cannot substitute unknown variable '" + name + "'");
        if (t[*i].block == Block::generator)
            throw invalid_input("cannot substitute generator variable '" + name + "'");
        values[*i] = value;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (assignments.count(t[i].name)) continue;
        index[i] = kept.size();
        kept.push_back(t[i]);
    }
    TablePtr target = assignments.empty() ? pres.table : make_table(std::move(kept));
    std::vector<Polynomial> rels;
    for (const Polynomial& r : pres.relations) {
        Polynomial s = map_variables(r, target, index, values, r.order());
        if (!s.is_zero()) rels.push_back(std::move(s));
    }
    std::string what = pres.description;
    if (!assignments.empty()) {
        what += " at";
        for (const auto& [name, value] : assignments) what += " " + name + "=" + to_string(value);
    }
    return make_presentation(std::move(target), std::move(rels), std::move(what));
}

/// Generates the same ideal after renaming a's variables (names not in @p rename map to themselves).
inline bool presentations_isomorphic_by_renaming(const RingPresentation& a, const RingPresentation& b,
                                                 const std::map<std::string, std::string>& rename) {
    const VariableTable& ta = *a.table;
    const VariableTable& tb = *b.table;
    for (const auto& [from, to] : rename)
        if (!ta.index_of(from)) throw invalid_input("rename source '" + from + "' is not a variable");
    if (ta.size() != tb.size()) throw invalid_input("rename is not a bijection: tables differ in size");
    std::vector<std::optional<std::size_t>> index(ta.size());
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        auto it = rename.find(ta[i].name);
        const std::string& to = it == rename.end() ? ta[i].name : it->second;
        auto j = tb.index_of(to);
        if (!j) throw invalid_input("rename target '" + to + "' is not a variable");
        if (tb[*j].degree != ta[i].degree || tb[*j].block != ta[i].block)
            throw invalid_input("rename " + ta[i].name + " -> " + to + " does not preserve degree and block");
        if (!hit.insert(*j).second) throw invalid_input("rename is not a bijection");
        index[i] = *j;
    }
    if (a.relations.empty() || b.relations.empty()) return a.relations.empty() && b.relations.empty();
    MonomialOrder order = MonomialOrder::block(tb);
    std::vector<Polynomial> renamed;
    const std::vector<Rational> none(ta.size());
    for (const Polynomial& r : a.relations) renamed.push_back(map_variables(r, b.table, index, none, order));
    GroebnerBasis ga = buchberger({b.table, renamed, order});
    GroebnerBasis gb = buchberger({b.table, b.relations, order});
    for (const Polynomial& r : renamed)
        if (!ideal_member(r, gb)) return false;
    for (const Polynomial& r : b.relations)
        if (!ideal_member(r, ga)) return false;
    return true;
}

/**
 * Stanley-Reisner presentation in class-group generators: each primitive
 * collection contributes the product of its divisors, with every D_rho
 * written in the class basis.
 */
inline RingPresentation stanley_reisner_ring(const ToricData& toric) {
    auto r = static_cast<std::size_t>(toric.picard_rank);
    if (matrix_rank(toric.grading, r) != toric.picard_rank)
        throw invalid_input("grading matrix rank deficiency");
    std::vector<Variable> vars;
    for (const auto& n : toric.class_names()) vars.push_back({n, 1, Block::generator});
    TablePtr t = make_table(std::move(vars));
    auto divisor = [&](std::size_t rho) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < r; ++j)
            if (toric.grading[rho][j] != 0) terms.push_back({Monomial::variable(r, j), toric.grading[rho][j]});
        return Polynomial::from_terms(t, std::move(terms));
    };
    std::vector<Polynomial> rels;
    for (const auto& coll : toric.primitive_collections) {
        Polynomial p = Polynomial::constant(t, 1);
        for (std::size_t rho : coll) p = p * divisor(rho);
        if (!p.is_zero()) rels.push_back(std::move(p));
    }
    return make_presentation(std::move(t), std::move(rels), "Stanley-Reisner ring");
}

}  // namespace qsc
