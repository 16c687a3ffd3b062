#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qsc/qsc.hpp"

using namespace qsc;

namespace {

TablePtr p1p1_symbolic_table() {
    return make_table({{"psi", 1, Block::generator},
                       {"psit", 1, Block::generator},
                       {"q1", 2, Block::instanton},
                       {"q2", 2, Block::instanton},
                       {"eps1", 0, Block::parameter},
                       {"eps2", 0, Block::parameter},
                       {"eps3", 0, Block::parameter}});
}

TablePtr p2_table() { return make_table({{"H", 1, Block::generator}, {"q", 3, Block::instanton}}); }

}  // namespace

TEST_CASE("variable tables enforce their invariants", "[polynomial]") {
    CHECK_THROWS_AS(make_table({{"x", 1, Block::generator}, {"x", 1, Block::generator}}), invalid_input);
    CHECK_THROWS_AS(make_table({{"q", 2, Block::instanton}, {"x", 1, Block::generator}}), invalid_input);
    CHECK_THROWS_AS(make_table({{"e", 1, Block::parameter}}), invalid_input);
    CHECK_THROWS_AS(make_table({{"x", 0, Block::generator}}), invalid_input);
    CHECK_THROWS_AS(make_table({{"2x", 1, Block::generator}}), invalid_input);
    auto t = p1p1_symbolic_table();
    CHECK(t->block_range(Block::instanton) == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK(t->block_size(Block::parameter) == 3);
}

TEST_CASE("poly_add", "[polynomial]") {
    auto t = p2_table();
    auto H = Polynomial::variable(t, "H");
    CHECK(poly_add(H * H + H, -H) == H * H);
    CHECK(poly_add(H, Polynomial(t)) == H);
    auto x = Polynomial::variable(t, "H");
    CHECK(poly_add(Rational(1, 2) * x, Rational(1, 3) * x) == Rational(5, 6) * x);
    CHECK((H - H).is_zero());

    auto other = make_table({{"H", 1, Block::generator}});
    CHECK_THROWS_AS(H + Polynomial::variable(other, "H"), table_mismatch);
}

TEST_CASE("poly_mul", "[polynomial]") {
    auto t = make_table({{"H1", 1, Block::generator}, {"H2", 1, Block::generator}});
    auto h1 = Polynomial::variable(t, "H1"), h2 = Polynomial::variable(t, "H2");
    CHECK(poly_mul(h1 + h2, h1 + h2) == h1 * h1 + Rational(2) * h1 * h2 + h2 * h2);
    CHECK(poly_mul(h1 + h2, Polynomial::constant(t, 1)) == h1 + h2);
    auto s = p1p1_symbolic_table();
    auto psi = Polynomial::variable(s, "psi"), psit = Polynomial::variable(s, "psit");
    auto prod = poly_mul(psi, psit);
    REQUIRE(prod.size() == 1);
    CHECK(prod.leading_monomial() == Monomial(std::vector<Exponent>{1, 1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(h1 * psi, table_mismatch);
}

TEST_CASE("graded_degree", "[polynomial]") {
    auto t = p2_table();
    CHECK(graded_degree(parse_poly("H^3 - q", t)) == 3);
    CHECK_FALSE(graded_degree(parse_poly("H + H^2", t)).has_value());
    CHECK_FALSE(graded_degree(Polynomial(t)).has_value());
    CHECK(is_homogeneous(Polynomial(t)));

    auto s = p1p1_symbolic_table();
    CHECK(graded_degree(parse_poly("psi^2 + eps1*psi*psit - eps2*eps3*psit^2 - q1", s)) == 2);
}

TEST_CASE("monomial orders", "[polynomial]") {
    auto s = p1p1_symbolic_table();
    auto mono = [&](std::vector<Exponent> e) {
        e.resize(s->size(), 0);
        return Monomial(std::move(e));
    };
    auto psi2 = mono({2}), psipsit = mono({1, 1}), psi = mono({1}), q1cubed = mono({0, 0, 3});
    CHECK(compare(MonomialOrder::degrevlex(), psi2, psipsit) > 0);
    CHECK(compare(MonomialOrder::lex(), psi2, psipsit) > 0);
    CHECK(compare(MonomialOrder::block(*s), psi, q1cubed) > 0);
    CHECK(compare(MonomialOrder::degrevlex(), psi, q1cubed) < 0);
    for (auto o : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block(*s)})
        CHECK(compare(o, psipsit, psipsit) == 0);
    // x^2 z vs x y^2: degrevlex prefers the one with smaller last exponent.
    auto t = testing::plain_table(3);
    CHECK(compare(MonomialOrder::degrevlex(), Monomial({1, 2, 0}), Monomial({2, 0, 1})) > 0);
    CHECK(compare(MonomialOrder::lex(), Monomial({1, 2, 0}), Monomial({2, 0, 1})) < 0);
}

TEST_CASE("orders are total, antisymmetric, transitive and multiplicative", "[polynomial][property]") {
    std::mt19937_64 rng(7);
    auto s = p1p1_symbolic_table();
    std::uniform_int_distribution<Exponent> e(0, 3);
    auto rnd = [&] {
        std::vector<Exponent> v(s->size());
        for (auto& x : v) x = e(rng);
        return Monomial(v);
    };
    for (auto o : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block(*s)}) {
        for (int i = 0; i < 300; ++i) {
            Monomial a = rnd(), b = rnd(), c = rnd();
            auto ab = o.compare(a, b);
            CHECK((ab == 0) == (a == b));
            CHECK((o.compare(b, a) > 0) == (ab < 0));
            CHECK((o.compare(b, a) == 0) == (ab == 0));
            if (ab > 0 && o.compare(b, c) > 0) CHECK(o.compare(a, c) > 0);
            CHECK(o.compare(a * c, b * c) == ab);
        }
    }
}

TEST_CASE("ring axioms on random polynomials", "[polynomial][property]") {
    std::mt19937_64 rng(11);
    auto t = testing::plain_table(3);
    for (int i = 0; i < 100; ++i) {
        auto a = testing::random_poly(rng, t, 3, 4), b = testing::random_poly(rng, t, 3, 4),
             c = testing::random_poly(rng, t, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        // Sorted, no duplicates, no zeros.
        auto p = a * b + c;
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(sgn(p.terms()[k].coeff) != 0);
            if (k) CHECK(p.order().greater(p.terms()[k - 1].mono, p.terms()[k].mono));
        }
    }
}

TEST_CASE("degree of a product of homogeneous polynomials", "[polynomial][property]") {
    std::mt19937_64 rng(13);
    auto t = make_table({{"a", 1, Block::generator}, {"b", 2, Block::generator}, {"q", 3, Block::instanton}});
    auto homogeneous = [&](long d) {
        std::vector<Term> terms;
        for (const Monomial& m : testing::monomials_up_to(3, static_cast<unsigned>(d)))
            if (m.weighted_degree(*t) == d) terms.push_back({m, testing::random_rational(rng)});
        return Polynomial::from_terms(t, std::move(terms));
    };
    for (int i = 0; i < 50; ++i) {
        long d1 = 1 + i % 4, d2 = 1 + (i / 4) % 3;
        auto p = homogeneous(d1), q = homogeneous(d2);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(graded_degree(p * q) == d1 + d2);
    }
}
