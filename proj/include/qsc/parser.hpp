#pragma once

/**
 * @file parser.hpp
 * @brief Recursive-descent parser for polynomial expressions.
 *
 * Grammar (whitespace ignored):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary ('*' unary)*
 *     unary   := ('-' | '+') unary | power
 *     power   := primary ('^' INTEGER)?
 *     primary := NUMBER ('/' NUMBER)? | IDENT | '(' expr ')'
 *
 * `a/b` is only meaningful as a rational literal; there is no division
 * operator.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "qsc/error.hpp"
#include "qsc/polynomial.hpp"

namespace qsc {

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, TablePtr table, MonomialOrder order)
        : text_(text), table_(std::move(table)), order_(std::move(order)) {}

    Polynomial parse() {
        skip_space();
        if (pos_ == text_.size()) throw parse_error("empty expression", pos_);
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+'))
                p = p + term();
            else if (accept('-'))
                p = p - term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        while (accept('*')) p = p * unary();
        return p;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept('^')) return base;
        skip_space();
        std::size_t at = pos_;
        if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
            throw parse_error("exponent must be a non-negative integer literal", at);
        std::string num = digits();
        skip_space();
        if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '^'))
            throw parse_error("exponent must be a non-negative integer literal", at);
        if (num.size() > 6) throw parse_error("exponent too large", at);
        return base.pow(static_cast<unsigned>(std::stoul(num)));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = digits();
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                std::size_t at = pos_;
                if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
                    throw parse_error("expected denominator", at);
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) throw parse_error("zero denominator", at);
                lit += '/' + den;
            }
            return Polynomial::constant(table_, parse_rational(lit), order_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = table_->index_of(name);
            if (!idx) throw parse_error("unknown identifier '" + name + "'", start);
            return Polynomial::monomial(table_, Monomial::variable(table_->size(), *idx), 1, order_);
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return p;
        }
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    TablePtr table_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const TablePtr& table,
                             const MonomialOrder& order = MonomialOrder::degrevlex()) {
    return detail::ExpressionParser(text, table, order).parse();
}

}  // namespace qsc
