#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qsc/qsc.hpp"

using namespace qsc;

namespace {

std::vector<std::string> relations(const RingPresentation& p) {
    std::vector<std::string> out;
    for (const auto& r : p.relations) out.push_back(render(r));
    return out;
}

std::vector<std::string> basis(const QuotientAlgebra& qa) {
    std::vector<std::string> out;
    for (const auto& m : qa.module_basis) out.push_back(render(m, *qa.table()));
    return out;
}

const ParameterTriple zero{0, 0, 0};

}  // namespace

TEST_CASE("classical cohomology of products of projective spaces", "[rings]") {
    CHECK(relations(classical_cohomology_products({2})) == std::vector<std::string>{"H^3"});
    CHECK(relations(classical_cohomology_products({1, 1})) == std::vector<std::string>{"H1^2", "H2^2"});
    auto p1 = quotient_algebra(classical_cohomology_products({1}));
    CHECK(relations(p1.presentation) == std::vector<std::string>{"H^2"});
    CHECK(basis(p1) == std::vector<std::string>{"1", "H"});
    CHECK(classical_cohomology_products({1})
              .table->block_size(Block::instanton) == 0);
    CHECK_THROWS_AS(classical_cohomology_products({}), invalid_input);
    CHECK_THROWS_AS(classical_cohomology_products({0}), invalid_input);
}

TEST_CASE("quantum cohomology of products of projective spaces", "[rings]") {
    for (int n = 1; n <= 4; ++n) {
        auto p = quantum_cohomology_products({n});
        CHECK(relations(p) == std::vector<std::string>{"H^" + std::to_string(n + 1) + " - q"});
        CHECK((*p.table)[1].degree == n + 1);
        auto classical = substitute(p, {{"q", 0}});
        CHECK(relations(classical) == relations(classical_cohomology_products({n})));
        CHECK(presentations_isomorphic_by_renaming(classical, classical_cohomology_products({n}), {}));
    }
    CHECK(relations(quantum_cohomology_products({1, 1})) == std::vector<std::string>{"H1^2 - q1", "H2^2 - q2"});
}

TEST_CASE("sheaf cohomology presentations of P1 x P1", "[rings]") {
    auto p0 = qsc_presentation_p1p1(zero, zero);
    CHECK(relations(p0) == std::vector<std::string>{"psi^2 - q1", "psit^2 - q2"});
    CHECK(presentations_isomorphic_by_renaming(p0, quantum_cohomology_products({1, 1}),
                                               {{"psi", "H1"}, {"psit", "H2"}}));
    CHECK(relations(qsc_presentation_p1p1({1, 0, 0}, zero)) ==
          std::vector<std::string>{"psi^2 + psi*psit - q1", "psit^2 - q2"});
    CHECK(relations(qsc_presentation_p1p1({0, 1, 1}, zero)) ==
          std::vector<std::string>{"psi^2 - psit^2 - q1", "psit^2 - q2"});

    auto sym = qsc_presentation_p1p1_symbolic();
    CHECK(relations(sym) == std::vector<std::string>{"-psit^2*eps2*eps3 + psi*psit*eps1 + psi^2 - q1",
                                                     "-psi^2*gam2*gam3 + psi*psit*gam1 + psit^2 - q2"});
}

TEST_CASE("symbolic presentation specializes to the rational one", "[rings][property]") {
    std::mt19937_64 rng(5);
    auto sym = qsc_presentation_p1p1_symbolic();
    for (int i = 0; i < 20; ++i) {
        auto e = testing::random_triple(rng), g = testing::random_triple(rng);
        auto specialized = substitute(sym, {{"eps1", e[0]}, {"eps2", e[1]}, {"eps3", e[2]},
                                     {"gam1", g[0]}, {"gam2", g[1]}, {"gam3", g[2]}});
        CHECK(relations(specialized) == relations(qsc_presentation_p1p1(e, g)));
    }
}

TEST_CASE("quotient algebras", "[rings]") {
    auto p2 = quotient_algebra(quantum_cohomology_products({2}));
    CHECK(basis(p2) == std::vector<std::string>{"1", "H", "H^2"});
    auto q0 = quotient_algebra(qsc_presentation_p1p1(zero, zero));
    CHECK(basis(q0) == std::vector<std::string>{"1", "psi", "psit", "psi*psit"});
    CHECK(q0.graded_dimensions() == std::vector<std::size_t>{1, 2, 1});

    // eps = gam = (1,0,0): at q = 0 both relations contain psi + psit, so the
    // staircase is infinite.
    ParameterTriple e{1, 0, 0};
    CHECK(testing::p1p1_discriminant(e, e) == 0);
    CHECK_THROWS_AS(quotient_algebra(qsc_presentation_p1p1(e, e)), degenerate_presentation);
    CHECK_THROWS_AS(quotient_algebra(make_presentation(
                        make_table({{"x", 1, Block::generator}, {"y", 1, Block::generator}}), {}, "free")),
                    degenerate_presentation);
}

TEST_CASE("relations vanish and ranks match for products", "[rings][property]") {
    std::vector<std::vector<int>> cases{{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}};
    for (const auto& dims : cases) {
        auto qa = quotient_algebra(quantum_cohomology_products(dims));
        for (const auto& r : qa.presentation.relations) CHECK(qa.normal_form(r).is_zero());
        std::size_t expect = 1;
        for (int n : dims) expect *= static_cast<std::size_t>(n + 1);
        CHECK(qa.module_basis.size() == expect);

        // Graded dimensions at q = 0 follow the product of (1 + t + ... + t^n).
        std::vector<std::size_t> poincare{1};
        for (int n : dims) {
            std::vector<std::size_t> next(poincare.size() + static_cast<std::size_t>(n), 0);
            for (std::size_t i = 0; i < poincare.size(); ++i)
                for (int k = 0; k <= n; ++k) next[i + static_cast<std::size_t>(k)] += poincare[i];
            poincare = next;
        }
        std::map<std::string, Rational> q0;
        for (const auto& v : qa.table()->variables())
            if (v.block == Block::instanton) q0[v.name] = 0;
        CHECK(quotient_algebra(substitute(qa.presentation, q0)).graded_dimensions() == poincare);
    }
}

TEST_CASE("random sheaf deformations have rank four unless the resultant vanishes", "[rings][property]") {
    std::mt19937_64 rng(17);
    int ok = 0;
    for (int i = 0; i < 20; ++i) {
        auto e = testing::random_triple(rng), g = testing::random_triple(rng);
        auto pres = qsc_presentation_p1p1(e, g);
        if (testing::p1p1_discriminant(e, g) == 0) {
            CHECK_THROWS_AS(quotient_algebra(pres), degenerate_presentation);
            continue;
        }
        auto qa = quotient_algebra(pres);
        ++ok;
        CHECK(qa.module_basis.size() == 4);
        for (const auto& r : pres.relations) CHECK(qa.normal_form(r).is_zero());
        // The q = 0 staircase equals the generic staircase.
        auto classical = quotient_algebra(substitute(pres, {{"q1", 0}, {"q2", 0}}));
        REQUIRE(classical.module_basis.size() == 4);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(render(classical.module_basis[k], *classical.table()) ==
                  render(qa.module_basis[k], *qa.table()));
    }
    CHECK(ok >= 15);
    // Hand-picked degenerate draws on the resultant locus.
    for (auto [e, g] : {std::pair<ParameterTriple, ParameterTriple>{{1, 0, 0}, {1, 0, 0}},
                        {{0, 1, 1}, {0, 1, 1}},
                        {{2, 0, 0}, {Rational(1, 2), 0, 0}}}) {
        CHECK(testing::p1p1_discriminant(e, g) == 0);
        CHECK_THROWS_AS(quotient_algebra(qsc_presentation_p1p1(e, g)), degenerate_presentation);
    }
}

TEST_CASE("substitute", "[rings]") {
    auto qh = quantum_cohomology_products({3});
    CHECK(relations(substitute(qh, {{"q", 0}})) == std::vector<std::string>{"H^4"});
    CHECK(relations(substitute(qh, {})) == relations(qh));
    CHECK_THROWS_AS(substitute(qh, {{"q", 2}}), invalid_input);  // loses homogeneity
    CHECK_THROWS_AS(substitute(qh, {{"H", 0}}), invalid_input);
    CHECK_THROWS_AS(substitute(qh, {{"z", 0}}), invalid_input);

    auto sc = substitute(qsc_presentation_p1p1({1, 2, 3}, {0, 1, 1}), {{"q1", 0}, {"q2", 0}});
    CHECK(relations(sc) == relations(sheaf_cohomology_p1p1({1, 2, 3}, {0, 1, 1})));
}

TEST_CASE("isomorphism by renaming", "[rings]") {
    auto a = quantum_cohomology_products({2}), b = quantum_cohomology_products({3});
    CHECK_THROWS_AS(presentations_isomorphic_by_renaming(a, b, {}), invalid_input);  // degree of q differs
    auto c2 = classical_cohomology_products({2}), c3 = classical_cohomology_products({3});
    CHECK_FALSE(presentations_isomorphic_by_renaming(c2, c3, {}));
    CHECK(presentations_isomorphic_by_renaming(a, a, {}));
    auto p11 = quantum_cohomology_products({1, 1});
    CHECK(presentations_isomorphic_by_renaming(p11, p11, {{"H1", "H2"}, {"H2", "H1"}, {"q1", "q2"}, {"q2", "q1"}}));
    CHECK_THROWS_AS(presentations_isomorphic_by_renaming(p11, p11, {{"H1", "H2"}}), invalid_input);
    // Same ideal, different generators.
    auto t = quantum_cohomology_products({1, 1}).table;
    auto alt = make_presentation(t, {parse_poly("H1^2 + H2^2 - q1 - q2", t), parse_poly("H2^2 - q2", t)}, "alt");
    CHECK(presentations_isomorphic_by_renaming(alt, p11, {}));
}

TEST_CASE("stanley_reisner_ring", "[rings]") {
    CHECK(relations(stanley_reisner_ring(product_projective_toric({2}))) == std::vector<std::string>{"h^3"});
    CHECK(relations(stanley_reisner_ring(product_projective_toric({1, 1}))) ==
          std::vector<std::string>{"h1^2", "h2^2"});
    CHECK(relations(stanley_reisner_ring(product_projective_toric({1}))) == std::vector<std::string>{"h^2"});
    auto bad = make_toric_data({"x0", "x1"}, {{1, 1}, {2, 2}}, {{0, 1}}, {{0}, {1}});
    CHECK_THROWS_AS(stanley_reisner_ring(bad), invalid_input);
}
