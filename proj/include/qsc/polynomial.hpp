#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with exact rational coefficients.
 *
 * Terms are kept sorted strictly descending under the polynomial's monomial
 * order, with no zero coefficients and no repeated monomials. Polynomials
 * are values; every operation returns a fresh normalized polynomial.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/monomial.hpp"
#include "qsc/monomial_order.hpp"
#include "qsc/rational.hpp"
#include "qsc/variable_table.hpp"

namespace qsc {

struct Term {
    Monomial mono;
    Rational coeff;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(TablePtr table, MonomialOrder order = MonomialOrder::degrevlex())
        : table_(std::move(table)), order_(std::move(order)) {}

    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(TablePtr table, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::degrevlex()) {
        Polynomial p(std::move(table), std::move(order));
        for (const Term& t : terms)
            if (t.mono.size() != p.table_->size()) throw table_mismatch();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return p.order_.greater(a.mono, b.mono); });
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i + 1;
            Rational c = terms[i].coeff;
            while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
            if (!qsc::is_zero(c)) p.terms_.push_back({std::move(terms[i].mono), std::move(c)});
            i = j;
        }
        return p;
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(TablePtr table, std::vector<Term> terms, MonomialOrder order) {
        Polynomial p(std::move(table), std::move(order));
        p.terms_ = std::move(terms);
        return p;
    }

    static Polynomial constant(TablePtr table, const Rational& c,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        Polynomial p(std::move(table), std::move(order));
        if (!qsc::is_zero(c)) p.terms_.push_back({Monomial(p.table_->size()), c});
        return p;
    }

    static Polynomial monomial(TablePtr table, Monomial m, const Rational& c = 1,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        if (m.size() != table->size()) throw table_mismatch();
        Polynomial p(std::move(table), std::move(order));
        if (!qsc::is_zero(c)) p.terms_.push_back({std::move(m), c});
        return p;
    }

    static Polynomial variable(TablePtr table, std::string_view name,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        auto idx = table->index_of(name);
        if (!idx) throw invalid_input("unknown variable '" + std::string(name) + "'");
        auto n = table->size();
        return monomial(std::move(table), Monomial::variable(n, *idx), 1, std::move(order));
    }

    const TablePtr& table() const { return table_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Monomial& leading_monomial() const {
        assert(!terms_.empty());
        return terms_.front().mono;
    }
    const Rational& leading_coefficient() const {
        assert(!terms_.empty());
        return terms_.front().coeff;
    }

    /// Coefficient of an exact monomial (zero if absent).
    Rational coefficient(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.mono == m) return t.coeff;
        return 0;
    }

    Polynomial with_order(const MonomialOrder& o) const {
        if (o == order_) return *this;
        return from_terms(table_, terms_, o);
    }

    Polynomial monic() const {
        if (terms_.empty() || leading_coefficient() == 1) return *this;
        Rational inv = 1 / leading_coefficient();
        return *this * inv;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        if (qsc::is_zero(c)) return Polynomial(a.table_, a.order_);
        Polynomial r = a;
        for (Term& t : r.terms_) t.coeff *= c;
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_tables(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.table_, a.order_);
        std::vector<Term> prod;
        prod.reserve(a.size() * b.size());
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return from_terms(a.table_, std::move(prod), a.order_);
    }

    /// Multiply by c * m, preserving order (monomial multiplication is monotone).
    Polynomial mul_term(const Monomial& m, const Rational& c) const {
        Polynomial r(table_, order_);
        if (qsc::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(table_, 1, order_);
        Polynomial base = *this;
        while (k) {
            if (k & 1u) result = result * base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return result;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Same table and same terms; orders may differ.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) return false;
        if (a.size() != b.size()) return false;
        const Polynomial bb = b.with_order(a.order_);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a.terms_[i].mono == bb.terms_[i].mono) || a.terms_[i].coeff != bb.terms_[i].coeff)
                return false;
        return true;
    }

private:
    static void check_tables(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) throw table_mismatch();
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b0, int sign) {
        check_tables(a, b0);
        const Polynomial b = b0.with_order(a.order_);
        Polynomial r(a.table_, a.order_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                r.terms_.push_back(a.terms_[i++]);
                continue;
            }
            if (i == a.size()) {
                r.terms_.push_back({b.terms_[j].mono, sign * b.terms_[j].coeff});
                ++j;
                continue;
            }
            auto c = a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({b.terms_[j].mono, sign * b.terms_[j].coeff});
                ++j;
            } else {
                Rational s = sign > 0 ? Rational(a.terms_[i].coeff + b.terms_[j].coeff)
                                      : Rational(a.terms_[i].coeff - b.terms_[j].coeff);
                if (!qsc::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    TablePtr table_;
    MonomialOrder order_ = MonomialOrder::degrevlex();
    std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Common degree of all terms under the table grading; nullopt when the
/// terms disagree or the polynomial is zero.
inline std::optional<long> graded_degree(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    long d = p.terms().front().mono.weighted_degree(*p.table());
    for (const Term& t : p.terms())
        if (t.mono.weighted_degree(*p.table()) != d) return std::nullopt;
    return d;
}

inline bool is_homogeneous(const Polynomial& p) { return p.is_zero() || graded_degree(p).has_value(); }

/**
 * Rewrites @p p over another table. Each source variable either maps to a
 * target index or is replaced by a rational value (entries of @p values are
 * consulted only where @p target_index is empty).
 */
inline Polynomial map_variables(const Polynomial& p, const TablePtr& target,
                                const std::vector<std::optional<std::size_t>>& target_index,
                                const std::vector<Rational>& values, const MonomialOrder& order) {
    assert(target_index.size() == p.table()->size());
    std::vector<Term> out;
    out.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<Exponent> e(target->size(), 0);
        Rational c = t.coeff;
        for (std::size_t i = 0; i < target_index.size(); ++i) {
            Exponent k = t.mono[i];
            if (k == 0) continue;
            if (target_index[i]) {
                e[*target_index[i]] += k;
            } else {
                Rational v;
                mpq_class base = values[i];
                mpz_class num, den;
                mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
                mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
                v = Rational(num, den);
                v.canonicalize();
                c *= v;
            }
        }
        if (!qsc::is_zero(c)) out.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return Polynomial::from_terms(target, std::move(out), order);
}

/// Same table; every variable of @p block replaced by zero.
inline Polynomial drop_block(const Polynomial& p, Block block) {
    auto [f, l] = p.table()->block_range(block);
    std::vector<Term> out;
    for (const Term& t : p.terms())
        if (t.mono.degree_in(f, l) == 0) out.push_back(t);
    return Polynomial::from_sorted_terms(p.table(), std::move(out), p.order());
}

}  // namespace qsc
