#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "reso/groebner.hpp"
#include "reso/morphism.hpp"

using namespace rt;

namespace {

Ideal monomialCurvePrime(const ContextPtr& C) {
    return Ideal(C, {pp(C, "y^2 - x*z"), pp(C, "y*z - x^3"), pp(C, "z^2 - x^2*y")});
}

}  // namespace

TEST_CASE("basis fixtures") {
    auto C = ctxQ({"x", "y", "z"});

    SUBCASE("principal ideal") {
        Ideal I(C, {pp(C, "x")});
        const auto& B = groebnerBasis(I, MonomialOrder::lex());
        REQUIRE(B.elements.size() == 1);
        CHECK(B.elements[0] == pp(C, "x"));
    }

    SUBCASE("monomial curve: basis vanishes on the parametrization") {
        Ideal I = monomialCurvePrime(C);
        const auto& B = groebnerBasis(I, MonomialOrder::degRevLex());
        auto T = ctxQ({"t"});
        RingMorphism param(C, T, {pp(T, "t^3"), pp(T, "t^4"), pp(T, "t^5")});
        for (const auto& g : B.elements) CHECK(param.apply(g).isZero());
        CHECK(B.elements.size() >= 3);
    }

    SUBCASE("degree-compatible basis represents the combination element") {
        Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3")});
        const auto& B = groebnerBasis(I, MonomialOrder::degRevLex());
        CHECK(normalForm(pp(C, "x*z^3 - y^4"), B).isZero());
        CHECK(normalForm(pp(C, "x*z^3 - y^4 + 1"), B) == pp(C, "1"));
    }
}

TEST_CASE("normal form and membership") {
    auto C = ctxQ({"x", "y", "z"});
    Ideal P = monomialCurvePrime(C);
    Ideal P2 = idealPower(P, 2);
    auto f = pp(C, "x^5 + x*y^3 + z^3 - 3*x^2*y*z");

    const auto& B2 = groebnerBasis(P2, MonomialOrder::degRevLex());
    CHECK(!normalForm(f, B2).isZero());                    // f not in P^2
    CHECK(normalForm(pp(C, "x") * f, B2).isZero());        // x*f in P^2

    SUBCASE("ideal absorption") {
        std::mt19937 rng(7);
        for (int i = 0; i < 20; ++i) {
            auto g = randomPoly(rng, C, 3, 3, true);
            Polynomial comb = Polynomial::zero(C);
            for (const auto& gen : P.generators()) comb = comb + g * gen;
            CHECK(inIdeal(comb, P));
            CHECK(inIdeal(pp(C, "x") * comb, P));
        }
    }
}

TEST_CASE("colon") {
    auto C = ctxQ({"x", "y"});

    SUBCASE("one colon step of the saturation fixture") {
        Ideal I(C, {pp(C, "x^2*y^2"), pp(C, "y^3")});
        Ideal Q = colonByPoly(I, pp(C, "y"));
        Ideal expected(C, {pp(C, "x^2*y"), pp(C, "y^2")});
        CHECK(idealEquals(Q, expected));
    }
    SUBCASE("colon by the unit ideal is the identity") {
        Ideal I(C, {pp(C, "x^2 - y")});
        CHECK(idealEquals(colon(I, Ideal::unit(C)), I));
    }
    SUBCASE("colon by zero is refused") {
        Ideal I(C, {pp(C, "x")});
        CHECK_THROWS_AS(colon(I, Ideal::zero(C)), DomainError);
    }
    SUBCASE("symbolic-square certificate: (P^2 : f) not inside P") {
        auto C3 = ctxQ({"x", "y", "z"});
        Ideal P = monomialCurvePrime(C3);
        auto f = pp(C3, "x^5 + x*y^3 + z^3 - 3*x^2*y*z");
        Ideal Q = colonByPoly(idealPower(P, 2), f);
        CHECK(!idealContains(P, Q));
    }
}

TEST_CASE("saturation") {
    auto C = ctxQ({"x", "y"});

    SUBCASE("full saturation blows up to the unit ideal") {
        Ideal I(C, {pp(C, "x^2*y^2"), pp(C, "y^3")});
        auto [S, steps] = saturate(I, pp(C, "y"));
        CHECK(isUnitIdeal(S));
        CHECK(steps >= 1);
    }
    SUBCASE("curve fixture") {
        Ideal I(C, {pp(C, "x^2 + x^17*y^17")});
        auto [S, steps] = saturate(I, pp(C, "x"));
        CHECK(idealEquals(S, Ideal(C, {pp(C, "1 + x^15*y^17")})));
    }
    SUBCASE("saturating by a unit is a fixpoint immediately") {
        Ideal I(C, {pp(C, "x^2 - y")});
        auto [S, steps] = saturate(I, pp(C, "1"));
        CHECK(steps == 0);
        CHECK(idealEquals(S, I));
    }
    SUBCASE("idempotence") {
        Ideal I(C, {pp(C, "x^3*y - x*y"), pp(C, "y^2")});
        auto h = pp(C, "x");
        auto once = saturate(I, h).ideal;
        auto twice = saturate(once, h).ideal;
        CHECK(idealEquals(once, twice));
    }
}

TEST_CASE("elimination") {
    SUBCASE("blowup relation of a point center") {
        auto C = ctxQ({"x", "y", "u", "v", "t"});
        Ideal I(C, {pp(C, "u - x*t"), pp(C, "v - y*t")});
        Ideal E = eliminate(I, {C->varIndex("t")});
        auto S = E.context();
        CHECK(idealEquals(E, Ideal(S, {pp(S, "x*v - y*u")})));
    }
    SUBCASE("weighted-center relation") {
        auto C = ctxQ({"x", "y", "u", "v", "t"});
        Ideal I(C, {pp(C, "u - x*t"), pp(C, "v - y^2*t")});
        Ideal E = eliminate(I, {C->varIndex("t")});
        auto S = E.context();
        CHECK(idealEquals(E, Ideal(S, {pp(S, "x*v - y^2*u")})));
    }
    SUBCASE("empty drop set is the identity") {
        auto C = ctxQ({"x", "y"});
        Ideal I(C, {pp(C, "x - y")});
        Ideal E = eliminate(I, {});
        CHECK(idealEquals(E, Ideal(E.context(), {pp(E.context(), "x - y")})));
    }
    SUBCASE("two-way membership against the source ideal") {
        auto C = ctxQ({"x", "y", "z"});
        std::mt19937 rng(11);
        for (int i = 0; i < 25; ++i) {
            Ideal I(C, {randomPoly(rng, C, 3, 3), randomPoly(rng, C, 3, 3)});
            Ideal E = eliminate(I, {2});
            for (const auto& g : E.generators()) {
                CHECK(inIdeal(liftToContext(g, C), I));
            }
        }
    }
}

TEST_CASE("Macaulay bases") {
    auto C = ctxQ({"x", "y", "z"});

    SUBCASE("the cusp-and-twist fixture needs a third element") {
        Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3")});
        auto mb = macaulayBasis(I);
        bool found = false;
        for (const auto& g : mb) {
            if (g == pp(C, "x*z^3 - y^4") || g == pp(C, "y^4 - x*z^3")) found = true;
        }
        CHECK(found);
        CHECK(mb.size() >= 3);
        for (const auto& g : mb) CHECK(inIdeal(g, I));
    }
    SUBCASE("principal ideals are their own Macaulay basis") {
        Ideal I(C, {pp(C, "x^2 + y*z")});
        auto mb = macaulayBasis(I);
        REQUIRE(mb.size() == 1);
        CHECK(mb[0] == pp(C, "x^2 + y*z"));
    }
    SUBCASE("a degree-one initial form is exposed") {
        auto C4 = ctxQ({"x", "y", "z", "w"});
        Ideal I(C4, {pp(C4, "x + x^7 - 3*y*w + y^7*z^2 + 17*y*z*w^5")});
        auto mb = macaulayBasis(I);
        bool hasLinear = false;
        for (const auto& g : mb)
            if (g.initialFormLowest().order0() == 1) hasLinear = true;
        CHECK(hasLinear);
    }
    SUBCASE("initial forms generate the initial forms of random elements") {
        Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3")});
        auto mb = macaulayBasis(I);
        std::vector<Polynomial> inForms;
        for (const auto& g : mb) inForms.push_back(g.initialFormLowest());
        Ideal inIdealOfI(C, inForms);
        std::mt19937 rng(23);
        for (int i = 0; i < 40; ++i) {
            Polynomial h = Polynomial::zero(C);
            for (const auto& gen : I.generators()) h = h + randomPoly(rng, C, 2, 2, true) * gen;
            if (h.isZero()) continue;
            CHECK(inIdeal(h.initialFormLowest(), inIdealOfI));
        }
    }
}

TEST_CASE("Krull dimension") {
    auto C = ctxQ({"x", "y", "z"});
    CHECK(krullDimension(Ideal(C, {pp(C, "x^2 + y^2 - z^2")})) == 2);
    CHECK(krullDimension(monomialCurvePrime(C)) == 1);
    CHECK(krullDimension(Ideal::zero(C)) == 3);
    CHECK_THROWS_AS(krullDimension(Ideal::unit(C)), DomainError);
}

TEST_CASE("radical membership") {
    auto C = ctxQ({"x", "y"});
    Ideal I(C, {pp(C, "x^2")});
    CHECK(radicalContains(I, pp(C, "x")));
    CHECK(!radicalContains(I, pp(C, "y")));
}

TEST_CASE("basis determinism") {
    auto C = ctxQ({"x", "y", "z"});
    auto run = [&]() {
        Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3"), pp(C, "z^2*x - y*x^2")});
        const auto& B = groebnerBasis(I, MonomialOrder::degRevLex());
        std::string s;
        for (const auto& g : B.elements) s += g.toString() + ";";
        return s;
    };
    CHECK(run() == run());
}

TEST_CASE("concurrent basis computation lands on one cached value") {
    auto C = ctxQ({"x", "y", "z"});
    Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3"), pp(C, "y^2*z - x^4")});
    std::vector<std::string> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t]() {
            auto B = groebnerBasis(I, MonomialOrder::degRevLex());
            std::string s;
            for (const auto& g : B.elements) s += g.toString() + ";";
            results[t] = s;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("a reduced basis generates the same ideal both ways") {
    auto C = ctxQ({"x", "y", "z"});
    Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3"), pp(C, "x*z - y^2")});
    auto B = groebnerBasis(I, MonomialOrder::degRevLex());
    Ideal fromBasis(C, B.elements);
    CHECK(idealContains(fromBasis, I));
    CHECK(idealContains(I, fromBasis));
}

TEST_CASE("every S-polynomial of a reduced basis reduces to zero") {
    auto C = ctxQ({"x", "y", "z"});
    std::mt19937 rng(101);
    for (int rep = 0; rep < 40; ++rep) {
        Ideal I(C, {randomPoly(rng, C, 4, 3), randomPoly(rng, C, 4, 3)});
        auto B = groebnerBasis(I, MonomialOrder::degRevLex());
        for (size_t i = 0; i < B.elements.size(); ++i) {
            for (size_t j = i + 1; j < B.elements.size(); ++j) {
                const auto& f = B.elements[i];
                const auto& g = B.elements[j];
                auto lead = [&](const Polynomial& p) {
                    const Monomial* best = nullptr;
                    for (const auto& [m, c] : p.terms())
                        if (!best || B.order.cmp(m, *best) > 0) best = &m;
                    return *best;
                };
                Monomial lf = lead(f), lg = lead(g);
                Monomial L = Monomial::lcm(lf, lg);
                Polynomial s = f.mulTerm(L.dividedBy(lf), f.coeff(lf).inverse()) -
                               g.mulTerm(L.dividedBy(lg), g.coeff(lg).inverse());
                CHECK(normalForm(s, B).isZero());
            }
        }
    }
}

TEST_CASE("the reduced basis is independent of the presentation") {
    auto C = ctxQ({"x", "y", "z"});
    Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3")});
    Ideal J(C, {pp(C, "x*y - z^3").scaled(Rational(-7)),
                pp(C, "x^2 - y^3") + pp(C, "x*y - z^3") * pp(C, "y - 2"),
                pp(C, "x^2 - y^3")});
    REQUIRE(idealEquals(I, J));
    auto BI = groebnerBasis(I, MonomialOrder::degRevLex());
    auto BJ = groebnerBasis(J, MonomialOrder::degRevLex());
    REQUIRE(BI.elements.size() == BJ.elements.size());
    for (size_t i = 0; i < BI.elements.size(); ++i) CHECK(BI.elements[i] == BJ.elements[i]);
}
