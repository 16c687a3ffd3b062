#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qsc/qsc.hpp"

using namespace qsc;

namespace {
TablePtr table() {
    return make_table({{"H", 1, Block::generator},
                       {"H1", 1, Block::generator},
                       {"H2", 1, Block::generator},
                       {"psi", 1, Block::generator},
                       {"psit", 1, Block::generator},
                       {"q", 3, Block::instanton}});
}
}  // namespace

TEST_CASE("parse_poly examples", "[parser]") {
    auto t = table();
    auto p = parse_poly("H^3 - q", t);
    REQUIRE(p.size() == 2);
    CHECK(p.terms()[0].mono == Monomial({3, 0, 0, 0, 0, 0}));
    CHECK(p.terms()[0].coeff == 1);
    CHECK(p.terms()[1].mono == Monomial({0, 0, 0, 0, 0, 1}));
    CHECK(p.terms()[1].coeff == -1);

    auto h1 = Polynomial::variable(t, "H1"), h2 = Polynomial::variable(t, "H2");
    CHECK(parse_poly("(H1+H2)^2", t) == h1 * h1 + Rational(2) * h1 * h2 + h2 * h2);

    auto psi = Polynomial::variable(t, "psi"), psit = Polynomial::variable(t, "psit");
    CHECK(parse_poly("2/3*psi*psit - psi^2", t) == Rational(2, 3) * psi * psit - psi * psi);
}

TEST_CASE("parser precedence and unary minus", "[parser]") {
    auto t = table();
    auto H = Polynomial::variable(t, "H");
    CHECK(parse_poly("-H^2", t) == -(H * H));
    CHECK(parse_poly("2*H^2", t) == Rational(2) * H * H);
    CHECK(parse_poly("--H", t) == H);
    CHECK(parse_poly("H - -H", t) == Rational(2) * H);
    CHECK(parse_poly("  1/2 * ( H + 1 ) ", t) == Rational(1, 2) * H + Polynomial::constant(t, Rational(1, 2)));
    CHECK(parse_poly("H^0", t) == Polynomial::constant(t, 1));
    CHECK(parse_poly("4/6", t) == Polynomial::constant(t, Rational(2, 3)));
    CHECK(parse_poly("0*H", t).is_zero());
}

TEST_CASE("parser errors carry positions", "[parser]") {
    auto t = table();
    auto position = [&](const char* text) {
        try {
            parse_poly(text, t);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position);
        }
        return -1L;
    };
    CHECK(position("H + x") == 4);
    CHECK(position("H +") == 3);
    CHECK(position("H^-1") == 2);
    CHECK(position("H^1/2") == 2);
    CHECK(position("H^(2)") == 2);
    CHECK(position("(H + 1") == 6);
    CHECK(position("H H") == 2);
    CHECK(position("1/0") == 2);
    CHECK(position("") == 0);
    CHECK(position("H/2") == 1);
    CHECK_THROWS_AS(parse_poly("unknown", t), parse_error);
    CHECK_THROWS_AS(parse_poly("H^2^3", t), parse_error);
}

TEST_CASE("canonical rendering", "[parser]") {
    auto t = make_table({{"psi", 1, Block::generator},
                         {"psit", 1, Block::generator},
                         {"q1", 2, Block::instanton},
                         {"q2", 2, Block::instanton}});
    CHECK(render(parse_poly("psit^2 - q2 + psi*psit*0", t)) == "psit^2 - q2");
    CHECK(render(parse_poly("-q1 + psi*psit + psi^2", t)) == "psi^2 + psi*psit - q1");
    CHECK(render(parse_poly("2/3*psi*psit - psi^2", t)) == "-psi^2 + 2/3*psi*psit");
    CHECK(render(parse_poly("-1", t)) == "-1");
    CHECK(render(Polynomial(t)) == "0");
    // Rendering ignores the stored order.
    auto p = parse_poly("q1 + psi", t, MonomialOrder::block(*t));
    CHECK(render(p) == "psi + q1");
}

TEST_CASE("parse and render are inverse", "[parser][property]") {
    std::mt19937_64 rng(3);
    auto t = table();
    for (int i = 0; i < 200; ++i) {
        auto p = testing::random_poly(rng, t, 4, 5);
        std::string text = render(p);
        CHECK(parse_poly(text, t) == p);
        CHECK(render(parse_poly(text, t)) == text);
    }
}
