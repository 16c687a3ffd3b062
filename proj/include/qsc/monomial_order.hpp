#pragma once

/**
 * @file monomial_order.hpp
 * @brief Degrevlex, lex and block monomial orders.
 *
 * Variable index 0 is the largest variable. Degrevlex compares plain
 * exponent sums first (not the table grading) and breaks ties by the
 * reverse-lexicographic rule: the monomial with the smaller exponent in the
 * last differing variable is greater.
 */

#include <compare>
#include <cstddef>
#include <vector>

#include "qsc/monomial.hpp"
#include "qsc/variable_table.hpp"

namespace qsc {

enum class OrderKind { degrevlex, lex, block };

class MonomialOrder {
public:
    struct Segment {
        std::size_t first;
        std::size_t last;
        OrderKind kind;
        friend bool operator==(const Segment&, const Segment&) = default;
    };

    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, {}); }

    /// Generator block, then instanton block, then parameter block; degrevlex inside each.
    static MonomialOrder block(const VariableTable& t) {
        std::vector<Segment> segs;
        for (Block b : {Block::generator, Block::instanton, Block::parameter}) {
            auto [f, l] = t.block_range(b);
            if (f != l) segs.push_back({f, l, OrderKind::degrevlex});
        }
        return MonomialOrder(OrderKind::block, std::move(segs));
    }

    /// Arbitrary consecutive segments; each must use degrevlex or lex.
    static MonomialOrder block(std::vector<Segment> segs) {
        return MonomialOrder(OrderKind::block, std::move(segs));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<Segment>& segments() const { return segs_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::degrevlex: return grevlex(a, b, 0, a.size());
            case OrderKind::lex: return plain_lex(a, b, 0, a.size());
            case OrderKind::block:
                for (const Segment& s : segs_) {
                    auto c = s.kind == OrderKind::lex ? plain_lex(a, b, s.first, s.last)
                                                      : grevlex(a, b, s.first, s.last);
                    if (c != 0) return c;
                }
                return std::strong_ordering::equal;
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind k, std::vector<Segment> segs) : kind_(k), segs_(std::move(segs)) {}

    static std::strong_ordering grevlex(const Monomial& a, const Monomial& b, std::size_t f, std::size_t l) {
        auto da = (f == 0 && l == a.size()) ? a.total_degree() : a.degree_in(f, l);
        auto db = (f == 0 && l == b.size()) ? b.total_degree() : b.degree_in(f, l);
        if (da != db) return da <=> db;
        for (std::size_t i = l; i-- > f;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }

    static std::strong_ordering plain_lex(const Monomial& a, const Monomial& b, std::size_t f, std::size_t l) {
        for (std::size_t i = f; i < l; ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    OrderKind kind_;
    std::vector<Segment> segs_;
};

inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

}  // namespace qsc
