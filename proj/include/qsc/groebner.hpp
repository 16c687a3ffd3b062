#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm, normal forms and (radical) ideal membership.
 */

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/polynomial.hpp"

namespace qsc {

struct IdealPresentation {
    TablePtr table;
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::degrevlex();
};

/// Reduced, monic, sorted descending by leading monomial.
struct GroebnerBasis {
    TablePtr table;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> elements;

    bool is_unit_ideal() const { return elements.size() == 1 && elements[0].is_constant(); }
};

inline Polynomial s_polynomial(const Polynomial& f0, const Polynomial& g0, const MonomialOrder& order) {
    if (f0.is_zero() || g0.is_zero()) throw invalid_input("S-polynomial of a zero polynomial");
    if (!same_table(f0.table(), g0.table())) throw table_mismatch();
    const Polynomial f = f0.with_order(order);
    const Polynomial g = g0.with_order(order);
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coefficient()) -
           g.mul_term(l / g.leading_monomial(), 1 / g.leading_coefficient());
}

namespace detail {

inline Polynomial drop_leading(const Polynomial& p) {
    std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
    return Polynomial::from_sorted_terms(p.table(), std::move(rest), p.order());
}

/// Full reduction; divisors must already be sorted in @p order.
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& divisors) {
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.terms().front();
        const Polynomial* hit = nullptr;
        for (const Polynomial& g : divisors)
            if (!g.is_zero() && divides(g.leading_monomial(), lt.mono)) {
                hit = &g;
                break;
            }
        if (hit) {
            Rational c = lt.coeff / hit->leading_coefficient();
            Monomial m = lt.mono / hit->leading_monomial();
            p = p - hit->mul_term(m, c);
        } else {
            remainder.push_back(lt);
            p = drop_leading(p);
        }
    }
    return Polynomial::from_sorted_terms(p.table(), std::move(remainder), p.order());
}

/// Minimal, interreduced, monic and sorted; input must generate the ideal and be a Gröbner basis.
inline std::vector<Polynomial> reduce_groebner(std::vector<Polynomial> g, const MonomialOrder& order) {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = g[j].leading_monomial();
            const Monomial& b = g[i].leading_monomial();
            if (divides(a, b) && (!(a == b) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i].monic());
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

}  // namespace detail

/// Remainder of @p p on division by @p basis: no term is divisible by any leading monomial.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
    std::vector<Polynomial> divisors;
    divisors.reserve(basis.size());
    for (const Polynomial& g : basis) {
        if (g.is_zero()) throw invalid_input("zero polynomial in a reduction basis");
        if (!same_table(g.table(), p.table())) throw table_mismatch();
        divisors.push_back(g.with_order(order));
    }
    return detail::reduce(p.with_order(order), divisors);
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!same_table(gb.table, p.table())) throw table_mismatch();
    return detail::reduce(p.with_order(gb.order), gb.elements);
}

/**
 * Reduced Gröbner basis by Buchberger's algorithm.
 *
 * Pairs are taken by the normal strategy (smallest lcm degree, then smallest
 * index pair). Pairs with coprime leading monomials and pairs covered by the
 * chain criterion are skipped.
 */
inline GroebnerBasis buchberger(const IdealPresentation& ideal) {
    const MonomialOrder& order = ideal.order;
    std::vector<Polynomial> g;
    for (const Polynomial& p : ideal.generators) {
        if (!same_table(p.table(), ideal.table)) throw table_mismatch();
        if (!p.is_zero()) g.push_back(p.with_order(order).monic());
    }
    if (g.empty()) throw invalid_input("ideal presentation has no nonzero generators");

    auto unit = [&] {
        return GroebnerBasis{ideal.table, order, {Polynomial::constant(ideal.table, 1, order)}};
    };
    for (const Polynomial& p : g)
        if (p.is_constant()) return unit();

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pairs;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});

    auto key = [](std::size_t a, std::size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; };

    while (!pairs.empty()) {
        auto best = pairs.begin();
        std::uint64_t best_deg = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial()).total_degree();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            auto d = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial()).total_degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);

        const Monomial& li = g[i].leading_monomial();
        const Monomial& lj = g[j].leading_monomial();
        if (coprime(li, lj)) continue;
        Monomial l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (divides(g[k].leading_monomial(), l) && !pairs.count(key(i, k)) && !pairs.count(key(j, k)))
                chain = true;
        }
        if (chain) continue;

        Polynomial s = detail::reduce(s_polynomial(g[i], g[j], order), g);
        if (s.is_zero()) continue;
        if (s.is_constant()) return unit();
        g.push_back(s.monic());
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.insert({k, g.size() - 1});
    }
    return GroebnerBasis{ideal.table, order, detail::reduce_groebner(std::move(g), order)};
}

inline bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

/// True iff every pairwise S-polynomial reduces to zero.
inline bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    return true;
}

/**
 * Radical membership by the Rabinowitsch trick: p lies in the radical of I
 * iff 1 lies in I + <1 - t p> for a fresh variable t, computed in degrevlex
 * on the table extended by t as its last variable.
 */
inline bool radical_member(const Polynomial& p, const IdealPresentation& ideal) {
    if (!same_table(p.table(), ideal.table)) throw table_mismatch();
    const VariableTable& base = *ideal.table;
    std::string fresh = "t";
    while (base.index_of(fresh)) fresh += '_';
    std::vector<Variable> vars = base.variables();
    vars.push_back({fresh, 0, Block::parameter});
    TablePtr ext = make_table(std::move(vars));

    const MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<std::optional<std::size_t>> index(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) index[i] = i;
    const std::vector<Rational> none(base.size());
    auto embed = [&](const Polynomial& q) { return map_variables(q, ext, index, none, order); };

    IdealPresentation extended{ext, {}, order};
    for (const Polynomial& g : ideal.generators)
        if (!g.is_zero()) extended.generators.push_back(embed(g));
    Polynomial t = Polynomial::variable(ext, fresh, order);
    extended.generators.push_back(Polynomial::constant(ext, 1, order) - t * embed(p));
    return buchberger(extended).is_unit_ideal();
}

}  // namespace qsc
